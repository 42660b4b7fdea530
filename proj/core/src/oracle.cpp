#include "intervar/oracle.hpp"

#include "intervar/sampling.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace intervar {

Rational ScalarAssignment::k(int row, int col) const {
    auto it = k_values.find({row, col});
    return it == k_values.end() ? Rational(0) : it->second;
}

Rational ScalarAssignment::l(int row, int col) const {
    auto it = l_values.find({row, col});
    return it == l_values.end() ? Rational(0) : it->second;
}

Rational ScalarAssignment::value_of(const Variable& v) const {
    return v.family == VarFamily::K ? k(v.row, v.col) : l(v.row, v.col);
}

void ScalarAssignment::set(const Variable& v, Rational value) {
    auto& target = v.family == VarFamily::K ? k_values : l_values;
    if (value.is_zero()) {
        target.erase({v.row, v.col});
    } else {
        target[{v.row, v.col}] = std::move(value);
    }
}

bool operator==(const ScalarAssignment& lhs, const ScalarAssignment& rhs) {
    return lhs.k_values == rhs.k_values && lhs.l_values == rhs.l_values;
}

namespace {

// One component morphism between interval summands: a scalar on a half-open
// support, the zero morphism everywhere else.
struct ComponentMorphism {
    bool alive = false;
    Rational scalar;
    Rational support_lo;
    Rational support_hi;

    Rational at(const Rational& x) const {
        if (!alive || scalar.is_zero()) return Rational(0);
        if (support_lo <= x && x < support_hi) return scalar;
        return Rational(0);
    }
};

// Morphism src -> dst shifted by e, carrying the given scalar. Zero when the
// hom criterion fails at that shift; otherwise supported where source and
// shifted target are both alive.
ComponentMorphism component(const IntervalModule& src, const IntervalModule& dst,
                            const Rational& e, Rational scalar) {
    ComponentMorphism out;
    const IntervalModule dst_shifted = shift(dst, e);
    if (!hom_nonzero(src, dst_shifted)) return out;
    out.alive = true;
    out.scalar = std::move(scalar);
    out.support_lo = src.birth();
    out.support_hi = dst_shifted.death();
    return out;
}

using MorphismMatrix = std::vector<std::vector<ComponentMorphism>>;

std::vector<std::vector<Rational>> eval_matrix(const MorphismMatrix& mat, const Rational& x) {
    std::vector<std::vector<Rational>> out(mat.size());
    for (std::size_t r = 0; r < mat.size(); ++r) {
        out[r].reserve(mat[r].size());
        for (const ComponentMorphism& entry : mat[r]) out[r].push_back(entry.at(x));
    }
    return out;
}

std::vector<std::vector<Rational>> multiply(const std::vector<std::vector<Rational>>& lhs,
                                            const std::vector<std::vector<Rational>>& rhs) {
    const std::size_t rows = lhs.size();
    const std::size_t inner = rhs.size();
    const std::size_t cols = inner == 0 ? 0 : rhs[0].size();
    std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < inner; ++i) {
            if (lhs[r][i].is_zero()) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (rhs[i][c].is_zero()) continue;
                out[r][c] += lhs[r][i] * rhs[i][c];
            }
        }
    }
    return out;
}

}  // namespace

bool check_interleaving(const PersistenceModule& m_module, const PersistenceModule& n_module,
                        const Rational& e, const ScalarAssignment& assignment) {
    if (e.is_negative()) throw std::invalid_argument("negative epsilon " + e.str());
    const auto& ms = m_module.summands;
    const auto& ns = n_module.summands;
    const int m = static_cast<int>(ms.size());
    const int n = static_cast<int>(ns.size());
    for (const auto& [pos, value] : assignment.k_values) {
        (void)value;
        if (pos.first < 1 || pos.first > n || pos.second < 1 || pos.second > m) {
            throw std::out_of_range("k position (" + std::to_string(pos.first) + ", " +
                                    std::to_string(pos.second) + ") outside the grid");
        }
    }
    for (const auto& [pos, value] : assignment.l_values) {
        (void)value;
        if (pos.first < 1 || pos.first > m || pos.second < 1 || pos.second > n) {
            throw std::out_of_range("l position (" + std::to_string(pos.first) + ", " +
                                    std::to_string(pos.second) + ") outside the grid");
        }
    }

    const Rational two_e = e * Rational(2);

    // Phi: M -> N.e (n x m), Psi: N -> M.e (m x n), both evaluated as given.
    // The composites are compared against the canonical projections, which
    // are the diagonal identity-scalar morphisms P -> P.2e.
    MorphismMatrix phi(n, std::vector<ComponentMorphism>(m));
    MorphismMatrix psi(m, std::vector<ComponentMorphism>(n));
    // Shifted copies Phi.e and Psi.e: the scalar is preserved, the support
    // moves left by e.
    MorphismMatrix phi_e(n, std::vector<ComponentMorphism>(m));
    MorphismMatrix psi_e(m, std::vector<ComponentMorphism>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            phi[i - 1][j - 1] = component(ms[j - 1], ns[i - 1], e, assignment.k(i, j));
            phi_e[i - 1][j - 1] = component(shift(ms[j - 1], e), shift(ns[i - 1], e), e,
                                            assignment.k(i, j));
        }
    }
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) {
            psi[j - 1][i - 1] = component(ns[i - 1], ms[j - 1], e, assignment.l(j, i));
            psi_e[j - 1][i - 1] = component(shift(ns[i - 1], e), shift(ms[j - 1], e), e,
                                            assignment.l(j, i));
        }
    }
    MorphismMatrix pi_m(m, std::vector<ComponentMorphism>(m));
    for (int j = 1; j <= m; ++j) pi_m[j - 1][j - 1] = component(ms[j - 1], ms[j - 1], two_e, Rational(1));
    MorphismMatrix pi_n(n, std::vector<ComponentMorphism>(n));
    for (int i = 1; i <= n; ++i) pi_n[i - 1][i - 1] = component(ns[i - 1], ns[i - 1], two_e, Rational(1));

    // Every entry above is constant between consecutive shifted endpoints,
    // so equality of morphisms reduces to finitely many exact comparisons.
    std::vector<Rational> points;
    for (const auto& summands : {ms, ns}) {
        for (const IntervalModule& s : summands) {
            for (const Rational& endpoint : {s.birth(), s.death()}) {
                points.push_back(endpoint);
                points.push_back(endpoint - e);
                points.push_back(endpoint - two_e);
            }
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Rational> grid;
    grid.reserve(points.size() * 2 + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        grid.push_back(points[i]);
        if (i + 1 < points.size()) grid.push_back(midpoint(points[i], points[i + 1]));
    }
    if (!points.empty()) grid.push_back(points.back() + Rational(1));

    for (const Rational& x : grid) {
        const auto lhs_m = multiply(eval_matrix(psi_e, x), eval_matrix(phi, x));
        if (lhs_m != eval_matrix(pi_m, x)) return false;
        const auto lhs_n = multiply(eval_matrix(phi_e, x), eval_matrix(psi, x));
        if (lhs_n != eval_matrix(pi_n, x)) return false;
    }
    return true;
}

bool satisfies_generators(const VarietyPresentation& presentation,
                          const ScalarAssignment& assignment) {
    return std::all_of(presentation.generators.begin(), presentation.generators.end(),
                       [&](const Polynomial& g) {
                           return g.evaluate([&](const Variable& v) {
                                      return assignment.value_of(v);
                                  }).is_zero();
                       });
}

namespace {

bool verified_witness(const VarietyPresentation& p, const ScalarAssignment& a) {
    return satisfies_generators(p, a) && check_interleaving(p.m_module, p.n_module, p.epsilon, a);
}

// Matching-shaped scalars: K and L carry 1 at the positions pairing M_t with
// N_perm(t), skipping forced-zero positions.
ScalarAssignment pattern_assignment(const VarietyPresentation& p, const std::vector<int>& perm) {
    ScalarAssignment a;
    for (std::size_t t = 0; t < perm.size(); ++t) {
        const int m_index = static_cast<int>(t) + 1;
        const int n_index = perm[t];
        const Variable k = k_var(n_index, m_index);
        const Variable l = l_var(m_index, n_index);
        if (!p.is_forced_zero(k)) a.set(k, Rational(1));
        if (!p.is_forced_zero(l)) a.set(l, Rational(1));
    }
    return a;
}

}  // namespace

ProbeResult probe_solutions(const VarietyPresentation& presentation, int budget,
                            std::uint64_t seed) {
    ProbeResult result;
    if (presentation.status_hint == StatusHint::ProvablyEmpty) return result;
    for (const Polynomial& g : presentation.generators) {
        if (g.is_nonzero_constant()) return result;
    }

    std::vector<ScalarAssignment> guesses;
    guesses.emplace_back();  // all zeros
    const int side = std::min(presentation.m, presentation.n);
    std::vector<int> identity(side);
    for (int t = 0; t < side; ++t) identity[t] = t + 1;
    guesses.push_back(pattern_assignment(presentation, identity));
    for (int a = 0; a < side; ++a) {
        for (int b = a + 1; b < side; ++b) {
            std::vector<int> swapped = identity;
            std::swap(swapped[a], swapped[b]);
            guesses.push_back(pattern_assignment(presentation, swapped));
        }
    }
    for (const ScalarAssignment& guess : guesses) {
        if (verified_witness(presentation, guess)) {
            result.witness_found = true;
            result.witness = guess;
            return result;
        }
    }

    std::vector<Variable> free_vars;
    for (int i = 1; i <= presentation.n; ++i) {
        for (int j = 1; j <= presentation.m; ++j) {
            if (!presentation.is_forced_zero(k_var(i, j))) free_vars.push_back(k_var(i, j));
        }
    }
    for (int j = 1; j <= presentation.m; ++j) {
        for (int i = 1; i <= presentation.n; ++i) {
            if (!presentation.is_forced_zero(l_var(j, i))) free_vars.push_back(l_var(j, i));
        }
    }

    static const std::array<Rational, 6> lattice = {
        Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-1, 2)};
    SampleRng rng(seed);
    for (int round = 0; round < budget; ++round) {
        ScalarAssignment candidate;
        for (const Variable& v : free_vars) {
            // Zero-leaning draw: solutions of these systems are sparse.
            const std::uint64_t pick = rng.next_below(8);
            candidate.set(v, pick < 3 ? Rational(0) : lattice[pick - 3 + 1]);
        }
        if (verified_witness(presentation, candidate)) {
            result.witness_found = true;
            result.witness = candidate;
            return result;
        }
    }
    return result;
}

VarietyClass classify_solutions_1x1(const IntervalModule& m, const IntervalModule& n,
                                    const Rational& e) {
    if (e.is_negative()) throw std::invalid_argument("negative epsilon " + e.str());
    // Recomputed from scratch through the hom criterion on shifted intervals.
    const bool k_possible = hom_nonzero(m, shift(n, e));
    const bool l_possible = hom_nonzero(n, shift(m, e));

    const PersistenceModule mm{"m", {m}};
    const PersistenceModule nn{"n", {n}};
    static const std::array<std::pair<Rational, Rational>, 6> probes = {{
        {Rational(0), Rational(0)},
        {Rational(1), Rational(0)},
        {Rational(0), Rational(1)},
        {Rational(1), Rational(1)},
        {Rational(2), Rational(1, 2)},
        {Rational(-1), Rational(-1)},
    }};
    unsigned accepted = 0;
    for (std::size_t idx = 0; idx < probes.size(); ++idx) {
        const auto& [kv, lv] = probes[idx];
        if (!kv.is_zero() && !k_possible) continue;
        if (!lv.is_zero() && !l_possible) continue;
        ScalarAssignment a;
        a.set(k_var(1, 1), kv);
        a.set(l_var(1, 1), lv);
        if (check_interleaving(mm, nn, e, a)) accepted |= 1u << idx;
    }
    switch (accepted) {
        case 0b000000: return VarietyClass::Empty;
        case 0b000001: return VarietyClass::Origin;
        case 0b000011: return VarietyClass::KAxis;
        case 0b000101: return VarietyClass::LAxis;
        case 0b111000: return VarietyClass::Hyperbola;
        case 0b111111: return VarietyClass::Plane;
        default:
            throw std::logic_error("probe acceptance pattern matches no variety class");
    }
}

AgreementReport oracle_agreement_sweep(std::uint64_t pairs, std::uint64_t seed) {
    AgreementReport report;
    report.pairs = pairs;
    for (std::uint64_t idx = 0; idx < pairs; ++idx) {
        SampleRng rng = SampleRng::for_index(seed ^ 0xa5a5a5a5a5a5a5a5ULL, idx);
        const IntervalModule m = rng.interval();
        const IntervalModule n = rng.interval();
        const Progression prog = progression(m, n);
        std::vector<Rational> points;
        for (std::size_t s = 0; s < prog.segments.size(); ++s) {
            points.push_back(prog.segments[s].start);
            if (s + 1 < prog.segments.size()) {
                points.push_back(midpoint(prog.segments[s].start, prog.segments[s + 1].start));
            } else {
                points.push_back(prog.segments[s].start + Rational(1));
            }
        }
        for (const Rational& point : points) {
            ++report.points_checked;
            const VarietyClass from_classifier = classify(m, n, point);
            const VarietyClass from_oracle = classify_solutions_1x1(m, n, point);
            if (from_classifier != from_oracle) {
                report.disagreements.push_back({idx, m, n, point, from_classifier, from_oracle});
            }
        }
    }
    return report;
}

}  // namespace intervar
