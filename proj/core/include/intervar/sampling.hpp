#pragma once

#include "intervar/interval.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace intervar {

/// Deterministic random source for endpoints, intervals and small modules.
/// Endpoints are fractions u/v with u uniform on [0, 400] and v uniform on
/// {1, ..., 20}: a rational lattice coarse enough that exact ties (for
/// example m1 = m2) occur with positive probability.
///
/// Streams are addressed by (seed, index) so that sample `index` is the same
/// regardless of how work is split across threads.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(mix(seed)) {}

    static SampleRng for_index(std::uint64_t seed, std::uint64_t index) {
        return SampleRng(mix(seed) ^ mix(index + 0x51c5fb536b1f7a23ULL));
    }

    /// Uniform value in [0, bound). Implemented with a plain modulo so the
    /// stream is identical on every platform.
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

    Rational endpoint() {
        return Rational(static_cast<long long>(next_below(401)),
                        static_cast<long long>(1 + next_below(20)));
    }

    IntervalModule interval() {
        for (;;) {
            Rational a = endpoint();
            Rational b = endpoint();
            if (a == b) continue;
            return a < b ? IntervalModule(a, b) : IntervalModule(b, a);
        }
    }

    PersistenceModule module(std::string name, int max_summands, int min_summands = 1) {
        PersistenceModule out;
        out.name = std::move(name);
        const int count = min_summands +
            static_cast<int>(next_below(static_cast<std::uint64_t>(max_summands - min_summands + 1)));
        out.summands.reserve(count);
        for (int i = 0; i < count; ++i) out.summands.push_back(interval());
        return out;
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace intervar
