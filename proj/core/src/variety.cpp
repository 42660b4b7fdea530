#include "intervar/variety.hpp"

#include <algorithm>
#include <stdexcept>

namespace intervar {

bool VarietyPresentation::is_forced_zero(const Variable& v) const {
    return std::binary_search(forced_zero.begin(), forced_zero.end(), v);
}

bool operator==(const VarietyPresentation& lhs, const VarietyPresentation& rhs) {
    auto module_eq = [](const PersistenceModule& a, const PersistenceModule& b) {
        return a.name == b.name && a.summands == b.summands;
    };
    return module_eq(lhs.m_module, rhs.m_module) && module_eq(lhs.n_module, rhs.n_module) &&
           lhs.m == rhs.m && lhs.n == rhs.n && lhs.epsilon == rhs.epsilon &&
           lhs.forced_zero == rhs.forced_zero && lhs.active_m == rhs.active_m &&
           lhs.active_n == rhs.active_n && lhs.generators == rhs.generators &&
           lhs.status_hint == rhs.status_hint;
}

VarietyPresentation build_variety(const PersistenceModule& m_module,
                                  const PersistenceModule& n_module,
                                  const Rational& e) {
    if (m_module.summands.empty() || n_module.summands.empty()) {
        throw std::invalid_argument("variety construction needs at least one summand per module");
    }
    if (e.is_negative()) throw std::invalid_argument("negative epsilon " + e.str());

    const auto& ms = m_module.summands;
    const auto& ns = n_module.summands;
    const int m = static_cast<int>(ms.size());
    const int n = static_cast<int>(ns.size());
    const Rational two_e = e * Rational(2);

    VarietyPresentation p;
    p.m_module = m_module;
    p.n_module = n_module;
    p.m = m;
    p.n = n;
    p.epsilon = e;

    // K(i,j) carries Hom(M_j, N_i.e); L(j,i) carries Hom(N_i, M_j.e).
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (!hom_window(ms[j - 1], ns[i - 1]).contains(e)) p.forced_zero.push_back(k_var(i, j));
        }
    }
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= n; ++i) {
            if (!hom_window(ns[i - 1], ms[j - 1]).contains(e)) p.forced_zero.push_back(l_var(j, i));
        }
    }
    std::sort(p.forced_zero.begin(), p.forced_zero.end());

    for (const Variable& v : p.forced_zero) p.generators.push_back(Polynomial::variable(v));

    // Entry (p,q) of L*K - P_M constrains the component M_q -> M_p.2e; it is
    // a condition only when that hom space is nonzero.
    for (int row = 1; row <= m; ++row) {
        for (int col = 1; col <= m; ++col) {
            if (!hom_window(ms[col - 1], ms[row - 1]).contains(two_e)) continue;
            p.active_m.emplace_back(row, col);
            Polynomial gen;
            for (int i = 1; i <= n; ++i) {
                const Variable l = l_var(row, i);
                const Variable k = k_var(i, col);
                if (p.is_forced_zero(l) || p.is_forced_zero(k)) continue;
                gen.add_term({l, k}, Rational(1));
            }
            if (row == col) gen.add_term({}, Rational(-1));
            p.generators.push_back(std::move(gen));
        }
    }

    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (!hom_window(ns[col - 1], ns[row - 1]).contains(two_e)) continue;
            p.active_n.emplace_back(row, col);
            Polynomial gen;
            for (int j = 1; j <= m; ++j) {
                const Variable k = k_var(row, j);
                const Variable l = l_var(j, col);
                if (p.is_forced_zero(k) || p.is_forced_zero(l)) continue;
                gen.add_term({k, l}, Rational(1));
            }
            if (row == col) gen.add_term({}, Rational(-1));
            p.generators.push_back(std::move(gen));
        }
    }

    const bool contradiction = std::any_of(p.generators.begin(), p.generators.end(),
                                           [](const Polynomial& g) { return g.is_nonzero_constant(); });
    p.status_hint = contradiction ? StatusHint::ProvablyEmpty : StatusHint::Unknown;
    return p;
}

}  // namespace intervar
