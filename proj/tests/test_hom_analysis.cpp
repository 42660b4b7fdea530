#include "intervar/hom_analysis.hpp"

#include "intervar/sampling.hpp"

#include <doctest.h>

#include <algorithm>

using namespace intervar;

namespace {

IntervalModule iv(const char* birth, const char* death) {
    return IntervalModule(Rational::parse(birth), Rational::parse(death));
}

}  // namespace

TEST_CASE("hom life of a disjoint pair") {
    const HomLifeSummary life = hom_life(iv("6", "8"), iv("1", "2"));
    CHECK(life.sigma == Rational(0));
    CHECK(life.sigma_prime == Rational(0));
    CHECK(life.tau == Rational(6));
    CHECK(life.tau_prime == Rational(7));
    CHECK(life.m1 == Rational(6));
    CHECK(life.m2 == Rational(1));
    CHECK(life.distance == Rational(1));
}

TEST_CASE("hom life of an equal pair") {
    const HomLifeSummary life = hom_life(iv("1", "3"), iv("1", "3"));
    CHECK(life.sigma == Rational(0));
    CHECK(life.tau == Rational(0));
    CHECK(life.sigma_prime == Rational(2));
    CHECK(life.tau_prime == Rational(2));
    CHECK(life.m1 == Rational(0));
    CHECK(life.m2 == Rational(1));
    CHECK(life.distance == Rational(0));
}

TEST_CASE("hom life of overlapping pairs") {
    const HomLifeSummary wide = hom_life(iv("1", "2.1"), iv("0.8", "2.2"));
    CHECK(wide.m1 == Rational(1, 5));
    CHECK(wide.m2 == Rational(7, 10));
    CHECK(wide.distance == Rational(1, 5));

    const HomLifeSummary nested = hom_life(iv("0.9", "2.1"), iv("1", "2"));
    CHECK(nested.m1 == Rational(1, 10));
    CHECK(nested.m2 == Rational(3, 5));
    CHECK(nested.distance == Rational(1, 10));
}

TEST_CASE("single surviving hom") {
    CHECK(single_hom_survives(iv("6", "8"), iv("1", "2")));
    CHECK_FALSE(single_hom_survives(iv("1", "2.1"), iv("0.8", "2.2")));
    CHECK(single_hom_survives(iv("1", "3"), iv("0", "2")));
}

TEST_CASE("last birth and last death identities hold on random pairs") {
    SampleRng rng(23);
    for (int i = 0; i < 2000; ++i) {
        const IntervalModule m = rng.interval();
        const IntervalModule n = rng.interval();
        const HomLifeSummary life = hom_life(m, n);
        const Rational a = m.birth(), b = m.death(), c = n.birth(), d = n.death();
        CHECK(std::max(life.sigma, life.tau) == std::max(abs(a - c), abs(b - d)));
        CHECK(std::max(life.sigma_prime, life.tau_prime) == std::max(abs(a - d), abs(b - c)));
        if (life.m1 >= life.m2) CHECK(single_hom_survives(m, n));
    }
}

TEST_CASE("hom life is symmetric up to swapping the window pair") {
    SampleRng rng(29);
    for (int i = 0; i < 500; ++i) {
        const IntervalModule m = rng.interval();
        const IntervalModule n = rng.interval();
        const HomLifeSummary mn = hom_life(m, n);
        const HomLifeSummary nm = hom_life(n, m);
        CHECK(mn.m1 == nm.m1);
        CHECK(mn.m2 == nm.m2);
        CHECK(mn.distance == nm.distance);
        CHECK(mn.sigma == nm.tau);
        CHECK(mn.sigma_prime == nm.tau_prime);
        CHECK(mn.tau == nm.sigma);
        CHECK(mn.tau_prime == nm.sigma_prime);
    }
}

TEST_CASE("zero distance means equal intervals") {
    SampleRng rng(31);
    for (int i = 0; i < 500; ++i) {
        const IntervalModule m = rng.interval();
        const IntervalModule n = rng.interval();
        CHECK((hom_life(m, n).distance == Rational(0)) == (m == n));
    }
}
