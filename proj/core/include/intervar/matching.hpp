#pragma once

#include "intervar/interval.hpp"

#include <utility>
#include <vector>

namespace intervar {

/// Optimal bottleneck matching between the summands of two modules.
/// Matching a pair [a,b) <-> [c,d) costs max(|a-c|, |b-d|); leaving a
/// summand unmatched costs its width; the distance is the minimum over all
/// partial matchings of the largest cost incurred. Indices are 1-based and
/// the matched-pair list is the lexicographically smallest optimal one.
struct MatchingResult {
    Rational distance;
    std::vector<std::pair<int, int>> matching;
    std::vector<int> unmatched_m;
    std::vector<int> unmatched_n;
};

MatchingResult match_distance(const PersistenceModule& m_module,
                              const PersistenceModule& n_module);

}  // namespace intervar
