#pragma once

#include "intervar/classifier.hpp"
#include "intervar/hom_analysis.hpp"
#include "intervar/matching.hpp"
#include "intervar/oracle.hpp"
#include "intervar/variety.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace intervar {

/// JSON schemas are versioned by a top-level "schema" field; all numbers are
/// exact rational strings and key order is fixed, so output is byte-stable.

const char* status_name(StatusHint status);

/// Module file: {"schema": "intervar/module/1", "name": ..., "intervals":
/// [{"birth": "1", "death": "4"}, ...]}. Throws std::invalid_argument with a
/// diagnostic on malformed input, unknown schema or degenerate intervals.
PersistenceModule parse_module_json(const std::string& text);
std::string render_module_json(const PersistenceModule& module);

/// All pairwise hom windows between the summands of M and N, plus the
/// M x M and N x N self tables.
std::string render_windows_json(const PersistenceModule& m_module,
                                const PersistenceModule& n_module);

std::string render_distance_json(const HomLifeSummary& life);
std::string render_distance_json(const MatchingResult& result);

struct ProbeAnnotation {
    int budget;
    std::uint64_t seed;
    ProbeResult result;
};

std::string render_variety_json(const VarietyPresentation& presentation,
                                const std::optional<ProbeAnnotation>& probe = std::nullopt);
VarietyPresentation parse_variety_json(const std::string& text);

std::string render_class_json(const Rational& epsilon, VarietyClass cls);

std::string render_progression_json(const std::string& m_name, const std::string& n_name,
                                    const Progression& prog);
/// Fixed-width timeline with exact tick labels, one cell per segment.
std::string render_progression_text(const std::string& m_name, const std::string& n_name,
                                    const Progression& prog);

/// A known mismatch between computed breakpoints and previously published
/// reference values, reported rather than silently absorbed.
struct Erratum {
    std::string id;
    std::string m_interval;
    std::string n_interval;
    std::vector<Rational> reference_ticks;
    std::vector<Rational> computed_breakpoints;
    std::string note;
};

std::string render_verify_json(std::uint64_t seed, const TheoremReport& theorem,
                               const AgreementReport& agreement,
                               const std::vector<Erratum>& errata);

}  // namespace intervar
