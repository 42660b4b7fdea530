#include "intervar/matching.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace intervar {

namespace {

// Bipartite feasibility at a candidate bottleneck value. Left side is
// {M summands} + {one dummy per N summand}, right side is {N summands} +
// {one dummy per M summand}. A summand may take its own dummy only when its
// width fits under the threshold; dummies pair with dummies freely. The
// threshold is feasible iff a perfect matching exists.
class FeasibilityGraph {
public:
    FeasibilityGraph(const std::vector<IntervalModule>& ms, const std::vector<IntervalModule>& ns,
                     const std::vector<std::vector<Rational>>& costs, const Rational& threshold)
        : ms_(ms), ns_(ns), costs_(costs), threshold_(threshold) {}

    // usable_m / usable_n flag the real summands still in play (fixed pairs
    // are removed together with their dummies).
    bool perfect_matching(const std::vector<bool>& usable_m,
                          const std::vector<bool>& usable_n) const {
        const int m = static_cast<int>(ms_.size());
        const int n = static_cast<int>(ns_.size());
        const int left = m + n;
        const int right = n + m;
        std::vector<int> right_owner(right, -1);
        int matched = 0;
        int required = 0;
        for (int u = 0; u < left; ++u) {
            if (u < m ? !usable_m[u] : !usable_n[u - m]) continue;
            ++required;
            std::vector<bool> visited(right, false);
            if (augment(u, usable_m, usable_n, visited, right_owner)) ++matched;
        }
        return matched == required;
    }

private:
    bool edge(int u, int v, const std::vector<bool>& usable_m,
              const std::vector<bool>& usable_n) const {
        const int m = static_cast<int>(ms_.size());
        const int n = static_cast<int>(ns_.size());
        const bool u_real = u < m;
        const bool v_real = v < n;
        if (u_real && !usable_m[u]) return false;
        if (v_real && !usable_n[v]) return false;
        if (!u_real && u - m >= 0 && !usable_n[u - m]) return false;
        if (!v_real && !usable_m[v - n]) return false;
        if (u_real && v_real) return costs_[u][v] <= threshold_;
        if (u_real && !v_real) return v - n == u && width(ms_[u]) <= threshold_;
        if (!u_real && v_real) return u - m == v && width(ns_[v]) <= threshold_;
        return true;  // dummy-dummy
    }

    bool augment(int u, const std::vector<bool>& usable_m, const std::vector<bool>& usable_n,
                 std::vector<bool>& visited, std::vector<int>& right_owner) const {
        const int right = static_cast<int>(ns_.size() + ms_.size());
        for (int v = 0; v < right; ++v) {
            if (visited[v] || !edge(u, v, usable_m, usable_n)) continue;
            visited[v] = true;
            if (right_owner[v] < 0 ||
                augment(right_owner[v], usable_m, usable_n, visited, right_owner)) {
                right_owner[v] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<IntervalModule>& ms_;
    const std::vector<IntervalModule>& ns_;
    const std::vector<std::vector<Rational>>& costs_;
    const Rational& threshold_;
};

Rational pair_cost(const IntervalModule& a, const IntervalModule& b) {
    return std::max(abs(a.birth() - b.birth()), abs(a.death() - b.death()));
}

}  // namespace

MatchingResult match_distance(const PersistenceModule& m_module,
                              const PersistenceModule& n_module) {
    const auto& ms = m_module.summands;
    const auto& ns = n_module.summands;
    const int m = static_cast<int>(ms.size());
    const int n = static_cast<int>(ns.size());

    MatchingResult result;
    if (m == 0 && n == 0) return result;

    std::vector<std::vector<Rational>> costs(m, std::vector<Rational>(n));
    std::vector<Rational> candidates;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            costs[i][j] = pair_cost(ms[i], ns[j]);
            candidates.push_back(costs[i][j]);
        }
    }
    for (const IntervalModule& s : ms) candidates.push_back(width(s));
    for (const IntervalModule& s : ns) candidates.push_back(width(s));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const std::vector<bool> all_m(m, true);
    const std::vector<bool> all_n(n, true);
    const auto feasible = [&](const Rational& threshold) {
        return FeasibilityGraph(ms, ns, costs, threshold).perfect_matching(all_m, all_n);
    };

    // The optimum is one of the candidate values; binary-search the sorted
    // list for the first feasible one.
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    assert(feasible(candidates[hi]));
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    result.distance = candidates[lo];
    const Rational& best = result.distance;

    // Lexicographically smallest optimal matched-pair list: fix pairs
    // greedily, stopping as soon as every leftover summand may be deleted.
    std::vector<bool> free_m(m, true);
    std::vector<bool> free_n(n, true);
    const auto coverage_done = [&]() {
        for (int i = 0; i < m; ++i) {
            if (free_m[i] && width(ms[i]) > best) return false;
        }
        for (int j = 0; j < n; ++j) {
            if (free_n[j] && width(ns[j]) > best) return false;
        }
        return true;
    };
    const auto extendable = [&]() {
        return FeasibilityGraph(ms, ns, costs, best).perfect_matching(free_m, free_n);
    };
    while (!coverage_done()) {
        bool fixed = false;
        for (int i = 0; i < m && !fixed; ++i) {
            if (!free_m[i]) continue;
            for (int j = 0; j < n && !fixed; ++j) {
                if (!free_n[j] || costs[i][j] > best) continue;
                free_m[i] = false;
                free_n[j] = false;
                if (extendable()) {
                    result.matching.emplace_back(i + 1, j + 1);
                    fixed = true;
                } else {
                    free_m[i] = true;
                    free_n[j] = true;
                }
            }
        }
        assert(fixed);
        if (!fixed) break;  // unreachable: the chosen threshold is feasible
    }
    for (int i = 0; i < m; ++i) {
        if (free_m[i]) result.unmatched_m.push_back(i + 1);
    }
    for (int j = 0; j < n; ++j) {
        if (free_n[j]) result.unmatched_n.push_back(j + 1);
    }
    return result;
}

}  // namespace intervar
