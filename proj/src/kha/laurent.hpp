#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "kha/monomial.hpp"
#include "kha/rational.hpp"

namespace kha {

// Exact multivariate Laurent polynomial over Q. Canonical form: no zero
// coefficients, terms ordered by the canonical monomial order.
class Laurent {
public:
    Laurent() = default;
    static Laurent zero() { return Laurent(); }
    static Laurent one() { return constant(Rational(1)); }
    static Laurent constant(const Rational& c);
    static Laurent term(const Monomial& m, const Rational& c);
    static Laurent symbol(Sym s, int exp = 1) { return term(Monomial::of(s, exp), Rational(1)); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    // Single term?
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    void add_term(const Monomial& m, const Rational& c);

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Rational& c) const;
    Laurent mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
    bool operator==(const Laurent& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Exact division by the binomial 1 - M; nullopt if not divisible.
    std::optional<Laurent> div_binomial(const Monomial& M) const;

    // Exact division by (p - q)^k treating the polynomial as univariate in
    // the symbol `p_` with Laurent coefficients; nullopt if not divisible.
    std::optional<Laurent> div_p_minus_q(Sym p_, Sym q_, int k) const;

    Laurent substitute(const std::map<Sym, Monomial>& bindings) const;
    Laurent derivative(Sym v) const;
    Rational eval(const std::map<Sym, Rational>& point) const;

    int min_exp(Sym s) const;  // 0 for the zero polynomial
    int max_exp(Sym s) const;
    bool contains(Sym s) const;
    void collect_symbols(std::set<Sym>& out) const;

    // Splits into coefficients by the exponent of s.
    std::map<int, Laurent> by_exponent(Sym s) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> t_;
};

}  // namespace kha
