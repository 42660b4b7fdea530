#pragma once

#include "intervar/classifier.hpp"
#include "intervar/interval.hpp"
#include "intervar/variety.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace intervar {

/// Explicit scalars for the two morphism matrices. Positions absent from the
/// maps are zero. Keys are 1-based (row, col) into the K (n x m) and
/// L (m x n) grids.
struct ScalarAssignment {
    std::map<std::pair<int, int>, Rational> k_values;
    std::map<std::pair<int, int>, Rational> l_values;

    Rational k(int row, int col) const;
    Rational l(int row, int col) const;
    Rational value_of(const Variable& v) const;
    void set(const Variable& v, Rational value);
};

bool operator==(const ScalarAssignment& lhs, const ScalarAssignment& rhs);

/// Definition-level interleaving check: builds the morphism matrices from
/// the scalars (a component is the zero morphism whenever the hom criterion
/// fails, whatever scalar was supplied), composes them pointwise and compares
/// against both canonical projections at every critical point. All morphisms
/// in sight are piecewise constant, so checking the finitely many critical
/// points (summand endpoints shifted by 0, e and 2e, plus a midpoint between
/// each consecutive pair) decides equality exactly.
bool check_interleaving(const PersistenceModule& m_module, const PersistenceModule& n_module,
                        const Rational& e, const ScalarAssignment& assignment);

/// Evaluates every generator at the assignment (absent positions are zero).
bool satisfies_generators(const VarietyPresentation& presentation,
                          const ScalarAssignment& assignment);

struct ProbeResult {
    bool witness_found = false;
    ScalarAssignment witness;
};

/// Semi-decision search for a point of the variety: the all-zero assignment,
/// identity and single-swap matching patterns restricted to the free
/// positions, then `budget` randomized rational samples. Every candidate
/// must satisfy the generators and pass check_interleaving before it is
/// returned.
ProbeResult probe_solutions(const VarietyPresentation& presentation, int budget,
                            std::uint64_t seed);

/// Classifies the 1x1 solution set by direct probing: six probe points
/// (0,0), (1,0), (0,1), (1,1), (2,1/2), (-1,-1) are accepted or rejected via
/// check_interleaving plus freshly recomputed forced-zero facts, and the
/// acceptance pattern is mapped to the class. Independent of classify():
/// shares none of its window logic.
VarietyClass classify_solutions_1x1(const IntervalModule& m, const IntervalModule& n,
                                    const Rational& e);

struct AgreementDisagreement {
    std::uint64_t pair_index;
    IntervalModule m;
    IntervalModule n;
    Rational point;
    VarietyClass classifier_class;
    VarietyClass oracle_class;
};

struct AgreementReport {
    std::uint64_t pairs = 0;
    std::uint64_t points_checked = 0;
    std::vector<AgreementDisagreement> disagreements;
    bool ok() const { return disagreements.empty(); }
};

/// Cross-checks classify() against classify_solutions_1x1() on random pairs,
/// at every breakpoint, every segment midpoint and one point inside the
/// terminal segment.
AgreementReport oracle_agreement_sweep(std::uint64_t pairs, std::uint64_t seed);

}  // namespace intervar
