#pragma once

#include "intervar/rational.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace intervar {

/// One scalar coordinate of the interleaving variable grid. K(i,j)
/// parametrizes the component M_j -> N_i shifted by epsilon; L(j,i)
/// parametrizes N_i -> M_j shifted by epsilon. Rows and columns are 1-based.
enum class VarFamily { K, L };

struct Variable {
    VarFamily family;
    int row;
    int col;

    friend bool operator==(const Variable& lhs, const Variable& rhs) {
        return lhs.family == rhs.family && lhs.row == rhs.row && lhs.col == rhs.col;
    }
    friend bool operator<(const Variable& lhs, const Variable& rhs) {
        return std::tie(lhs.family, lhs.row, lhs.col) < std::tie(rhs.family, rhs.row, rhs.col);
    }
};

inline Variable k_var(int row, int col) { return Variable{VarFamily::K, row, col}; }
inline Variable l_var(int row, int col) { return Variable{VarFamily::L, row, col}; }

/// Renders as "k[row][col]" or "l[row][col]".
std::string var_name(const Variable& v);

/// A monomial is a multiset of variables, kept sorted.
using Monomial = std::vector<Variable>;

/// Graded lexicographic order: lower total degree first, then lexicographic
/// on the sorted variable sequence.
struct MonomialOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse multivariate polynomial over the rationals, always held in
/// canonical form: no zero coefficients, variables sorted within each
/// monomial, terms ordered graded-lexicographically.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;
    using RawTerm = std::pair<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial constant(Rational value);
    static Polynomial variable(Variable v);
    /// Builds the canonical form of an arbitrary term list: sorts variables,
    /// merges duplicate monomials, drops zero coefficients.
    static Polynomial from_terms(const std::vector<RawTerm>& raw_terms);

    /// Adds coeff * product(vars) and restores canonical form.
    void add_term(Monomial vars, Rational coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree of the largest monomial; the zero polynomial reports 0.
    int degree() const;
    /// The value when the polynomial is constant (including zero), else nullopt.
    std::optional<Rational> as_constant() const;
    /// True when the polynomial is a nonzero constant, i.e. has no root.
    bool is_nonzero_constant() const;

    Rational evaluate(const std::function<Rational(const Variable&)>& value_of) const;

    std::string str() const;

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) {
        return !(lhs == rhs);
    }

private:
    TermMap terms_;
};

/// Re-normalizes a polynomial. Idempotent; the canonical form is unique.
Polynomial canonicalize(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace intervar
