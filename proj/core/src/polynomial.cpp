#include "intervar/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace intervar {

std::string var_name(const Variable& v) {
    std::string out = v.family == VarFamily::K ? "k" : "l";
    out += '[';
    out += std::to_string(v.row);
    out += "][";
    out += std::to_string(v.col);
    out += ']';
    return out;
}

bool MonomialOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

Polynomial Polynomial::constant(Rational value) {
    Polynomial p;
    p.add_term({}, std::move(value));
    return p;
}

Polynomial Polynomial::variable(Variable v) {
    Polynomial p;
    p.add_term({v}, Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(const std::vector<RawTerm>& raw_terms) {
    Polynomial p;
    for (const RawTerm& term : raw_terms) p.add_term(term.first, term.second);
    return p;
}

void Polynomial::add_term(Monomial vars, Rational coeff) {
    if (coeff.is_zero()) return;
    std::sort(vars.begin(), vars.end());
    auto it = terms_.find(vars);
    if (it == terms_.end()) {
        terms_.emplace(std::move(vars), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    if (terms_.empty()) return 0;
    // Graded order: the last term has the largest monomial.
    return static_cast<int>(terms_.rbegin()->first.size());
}

std::optional<Rational> Polynomial::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

bool Polynomial::is_nonzero_constant() const {
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rational Polynomial::evaluate(const std::function<Rational(const Variable&)>& value_of) const {
    Rational total;
    for (const auto& [vars, coeff] : terms_) {
        Rational term = coeff;
        for (const Variable& v : vars) term *= value_of(v);
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [vars, coeff] : terms_) {
        Rational magnitude = abs(coeff);
        if (out.empty()) {
            if (coeff.is_negative()) out += '-';
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        const bool unit = magnitude == Rational(1) && !vars.empty();
        if (!unit) out += magnitude.str();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i > 0 || !unit) out += '*';
            out += var_name(vars[i]);
        }
    }
    return out;
}

Polynomial canonicalize(const Polynomial& p) {
    std::vector<Polynomial::RawTerm> raw;
    raw.reserve(p.terms().size());
    for (const auto& [vars, coeff] : p.terms()) raw.emplace_back(vars, coeff);
    return Polynomial::from_terms(raw);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace intervar
