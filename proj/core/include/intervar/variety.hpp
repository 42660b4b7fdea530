#pragma once

#include "intervar/interval.hpp"
#include "intervar/polynomial.hpp"

#include <utility>
#include <vector>

namespace intervar {

enum class StatusHint { ProvablyEmpty, WitnessFound, Unknown };

/// Presentation of the variety of epsilon-interleavings between two
/// interval-decomposable modules M (m summands) and N (n summands).
///
/// Variables form the grid K (n x m) and L (m x n). forced_zero lists the
/// grid positions whose hom space is zero at shift epsilon; each also appears
/// as its own degree-1 generator. active_m / active_n list the entries of
/// L*K - P_M and K*L - P_N that are genuine constraints (those whose target
/// hom space at shift 2*epsilon is nonzero); their generators are emitted
/// with forced-zero variables already substituted away, so an unsatisfiable
/// entry shows up as a nonzero constant generator and status ProvablyEmpty.
///
/// Generator order is deterministic: forced-zero variables (sorted), then
/// M-constraints row-major, then N-constraints row-major.
struct VarietyPresentation {
    PersistenceModule m_module;
    PersistenceModule n_module;
    int m = 0;
    int n = 0;
    Rational epsilon;
    std::vector<Variable> forced_zero;
    std::vector<std::pair<int, int>> active_m;
    std::vector<std::pair<int, int>> active_n;
    std::vector<Polynomial> generators;
    StatusHint status_hint = StatusHint::Unknown;

    bool is_forced_zero(const Variable& v) const;
};

bool operator==(const VarietyPresentation& lhs, const VarietyPresentation& rhs);

/// Builds the presentation at shift e >= 0. Both modules must have at least
/// one summand.
VarietyPresentation build_variety(const PersistenceModule& m_module,
                                  const PersistenceModule& n_module,
                                  const Rational& e);

}  // namespace intervar
