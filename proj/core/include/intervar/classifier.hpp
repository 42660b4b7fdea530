#pragma once

#include "intervar/hom_analysis.hpp"
#include "intervar/interval.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intervar {

/// Shape of the variety of epsilon-interleavings between two interval
/// modules. KAxis leaves k free with l = 0, LAxis leaves l free with k = 0,
/// Hyperbola is the single constraint k*l = 1, Plane has no constraints.
enum class VarietyClass { Empty, Origin, KAxis, LAxis, Hyperbola, Plane };

const char* class_name(VarietyClass cls);
bool is_axis(VarietyClass cls);

/// The class of the variety at shift e >= 0, decided from the two hom
/// windows and the projection survival of the self-windows.
VarietyClass classify(const IntervalModule& m, const IntervalModule& n, const Rational& e);

/// The shifts at which the class changes, sorted ascending. Candidates are
/// the endpoints of both hom windows and the two widths; only those where
/// the class actually changes are kept.
std::vector<Rational> breakpoints(const IntervalModule& m, const IntervalModule& n);

/// Piecewise constant, right-continuous class timeline on [0, inf). The
/// first segment starts at 0, consecutive segments have distinct classes and
/// the final segment is Origin forever.
struct Progression {
    struct Segment {
        Rational start;
        VarietyClass cls;
    };
    std::vector<Segment> segments;
    std::vector<Rational> breakpoints;

    VarietyClass class_at(const Rational& e) const;
    /// Classes of the segments after dropping the Empty prefix.
    std::vector<VarietyClass> nonempty_classes() const;
    /// Start of the first non-Empty segment (the interleaving distance).
    const Rational& first_nonempty_start() const;
};

Progression progression(const IntervalModule& m, const IntervalModule& n);

/// The class sequence the trichotomy on m1 - m2 predicts, without computing
/// the timeline: origin/axis/origin when m1 > m2, axis/origin when m1 = m2,
/// hyperbola/plane/(axis)/origin when m1 < m2 where the axis segment exists
/// exactly when the two window suprema differ. Axis orientation is the
/// direction whose window survives past the distance.
std::vector<VarietyClass> predicted_progression(const IntervalModule& m, const IntervalModule& n);

struct TheoremDiscrepancy {
    std::uint64_t sample_index;
    IntervalModule m;
    IntervalModule n;
    std::string detail;
};

struct TheoremReport {
    std::uint64_t samples = 0;
    std::vector<TheoremDiscrepancy> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

/// Draws `samples` random interval pairs and reports every pair where the
/// computed timeline disagrees with the predicted class sequence (axis
/// orientation ignored), where the first nonempty class contradicts the sign
/// of m1 - m2, or where the timeline turns nonempty at a shift other than
/// the distance. Work is split across threads; results do not depend on the
/// thread count.
TheoremReport verify_theorem(std::uint64_t samples, std::uint64_t seed, int threads = 0);

}  // namespace intervar
