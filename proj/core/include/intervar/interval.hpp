#pragma once

#include "intervar/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace intervar {

/// One-parameter persistence module supported on the half-open interval
/// [birth, death), with birth < death enforced at construction.
class IntervalModule {
public:
    IntervalModule(Rational birth, Rational death);

    const Rational& birth() const { return birth_; }
    const Rational& death() const { return death_; }

    friend bool operator==(const IntervalModule& lhs, const IntervalModule& rhs) {
        return lhs.birth_ == rhs.birth_ && lhs.death_ == rhs.death_;
    }
    friend bool operator!=(const IntervalModule& lhs, const IntervalModule& rhs) {
        return !(lhs == rhs);
    }

private:
    Rational birth_;
    Rational death_;
};

/// Finite direct sum of interval modules. Summand order is part of the value:
/// it fixes the row/column indexing of every matrix built downstream.
struct PersistenceModule {
    std::string name;
    std::vector<IntervalModule> summands;
};

/// The set {x >= 0 | Hom(src, dst shifted by x) != 0} for a pair of interval
/// modules: either empty or a half-open window [lo, hi).
class HomWindow {
public:
    static HomWindow empty() { return HomWindow(); }
    static HomWindow window(Rational lo, Rational hi);

    bool is_empty() const { return empty_; }
    const Rational& lo() const;
    const Rational& hi() const;

    /// Half-open membership: lo <= x < hi. Always false for the empty window.
    bool contains(const Rational& x) const;

    /// True when [lo, hi) meets [threshold, inf), i.e. hi > threshold.
    bool intersects_from(const Rational& threshold) const;

    friend bool operator==(const HomWindow& lhs, const HomWindow& rhs);

private:
    HomWindow() : empty_(true) {}
    bool empty_;
    Rational lo_;
    Rational hi_;
};

/// Moves the support left by e: [birth - e, death - e). Requires e >= 0.
IntervalModule shift(const IntervalModule& interval, const Rational& e);

/// Nonzero-morphism criterion for src = [a,b), dst = [c,d):
/// c <= a < d <= b.
bool hom_nonzero(const IntervalModule& src, const IntervalModule& dst);

/// The window of shifts x >= 0 at which a nonzero morphism src -> dst.x
/// exists. Empty exactly when dst.death <= src.birth; otherwise
/// [max(dst.birth - src.birth, dst.death - src.death, 0), dst.death - src.birth).
HomWindow hom_window(const IntervalModule& src, const IntervalModule& dst);

/// Half the interval length.
Rational width(const IntervalModule& interval);

/// Whether the canonical map interval -> interval.2e is nonzero,
/// i.e. e < width(interval). Requires e >= 0.
bool projection_nonzero(const IntervalModule& interval, const Rational& e);

std::ostream& operator<<(std::ostream& os, const IntervalModule& interval);
std::ostream& operator<<(std::ostream& os, const HomWindow& window);

}  // namespace intervar
