#pragma once

#include "intervar/interval.hpp"

namespace intervar {

/// Birth and death shifts of the last surviving homomorphism in each
/// direction between two interval modules, together with the two terms of
/// the interleaving distance formula.
///
/// sigma/sigma_prime bound the window of M -> N.x, tau/tau_prime the window
/// of N -> M.x; each pair is (0, 0) when its window is empty. For M = [a,b),
/// N = [c,d):
///   m1 = max(|a-c|, |b-d|)   (shift where the last homomorphism is born)
///   m2 = max((b-a)/2, (d-c)/2)
///   distance = min(m1, m2)
struct HomLifeSummary {
    Rational sigma;
    Rational sigma_prime;
    Rational tau;
    Rational tau_prime;
    Rational m1;
    Rational m2;
    Rational distance;
};

HomLifeSummary hom_life(const IntervalModule& m, const IntervalModule& n);

/// True iff exactly one of the two hom windows meets [D, inf) where D is the
/// interleaving distance. Holds whenever m1 >= m2.
bool single_hom_survives(const IntervalModule& m, const IntervalModule& n);

}  // namespace intervar
