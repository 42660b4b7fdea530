#include "intervar/hom_analysis.hpp"

#include <algorithm>
#include <cassert>

namespace intervar {

HomLifeSummary hom_life(const IntervalModule& m, const IntervalModule& n) {
    HomLifeSummary out;
    const HomWindow mn = hom_window(m, n);
    const HomWindow nm = hom_window(n, m);
    if (!mn.is_empty()) {
        out.sigma = mn.lo();
        out.sigma_prime = mn.hi();
    }
    if (!nm.is_empty()) {
        out.tau = nm.lo();
        out.tau_prime = nm.hi();
    }
    const Rational& a = m.birth();
    const Rational& b = m.death();
    const Rational& c = n.birth();
    const Rational& d = n.death();
    out.m1 = std::max(abs(a - c), abs(b - d));
    out.m2 = std::max(width(m), width(n));
    out.distance = std::min(out.m1, out.m2);
    // Birth/death identities for the last homomorphism; both windows carry
    // the zero-fill convention for the empty case.
    assert(std::max(out.sigma, out.tau) == out.m1);
    assert(std::max(out.sigma_prime, out.tau_prime) == std::max(abs(a - d), abs(b - c)));
    return out;
}

bool single_hom_survives(const IntervalModule& m, const IntervalModule& n) {
    const HomLifeSummary life = hom_life(m, n);
    const bool k_alive = hom_window(m, n).intersects_from(life.distance);
    const bool l_alive = hom_window(n, m).intersects_from(life.distance);
    return k_alive != l_alive;
}

}  // namespace intervar
