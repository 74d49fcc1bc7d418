#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kha/errors.hpp"
#include "kha/laurent.hpp"

namespace kha {

// Exact rational function: Laurent numerator over a multiset of binomial
// factors 1 - M. Every denominator in the zeta/tau/mu formulas has this
// shape, which keeps cancellation and pole bookkeeping exact without any
// general multivariate GCD.
//
// Factors are stored in a canonical orientation (the leading symbol of M
// carries a positive exponent); constructing the associate orientation
// routes the unit -M through the numerator via 1 - M = -M (1 - M^{-1}).
class RatFunc {
public:
    RatFunc() = default;  // zero
    explicit RatFunc(Laurent num) : num_(std::move(num)) {}
    explicit RatFunc(const Rational& c) : num_(Laurent::constant(c)) {}
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Laurent::one()); }
    static RatFunc monomial(const Monomial& m, const Rational& c = Rational(1)) {
        return RatFunc(Laurent::term(m, c));
    }

    const Laurent& num() const { return num_; }
    const std::map<Monomial, int>& den() const { return den_; }
    Laurent den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool den_empty() const { return den_.empty(); }

    // Multiplies by 1/(1 - M)^mult. Throws DenominatorVanishes if M is the
    // unit monomial.
    RatFunc& mul_binomial_inv(const Monomial& M, int mult = 1);
    // Multiplies by (1 - M)^mult into the numerator.
    RatFunc& mul_binomial(const Monomial& M, int mult = 1);

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rational& c) const;
    RatFunc mul_laurent(const Laurent& l) const;
    RatFunc mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;

    // Exact cancellation: every denominator factor dividing the numerator is
    // removed. Idempotent, preserves equality.
    RatFunc simplified() const;

    // Equality by cross-multiplication.
    bool equals(const RatFunc& o) const;

    // True when simplified() carries an empty denominator ("polynomial
    // class" in the shuffle model).
    bool is_polynomial() const { return simplified().den_.empty(); }

    // Monomial substitution; bindings send single symbols to monomials.
    // Throws DenominatorVanishes if a denominator factor becomes 1 - 1.
    RatFunc substitute(const std::map<Sym, Monomial>& bindings) const;

    RatFunc derivative(Sym v) const;

    Rational eval(const std::map<Sym, Rational>& point) const;

    // Inverse. The numerator must factor as c * monomial * prod (1 - M_i);
    // throws NonBinomialDenominator otherwise.
    RatFunc inverse() const;
    RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }

    // The p -> q limit with removable-singularity cancellation in p.
    // Throws PoleAtPEqualsQ when the (p - q) order of the denominator
    // exceeds the numerator's.
    RatFunc limit_p_to_q() const;

    void collect_symbols(std::set<Sym>& out) const;
    bool contains(Sym s) const;

    std::string str() const;

private:
    Laurent num_;
    std::map<Monomial, int> den_;  // canonical factor -> multiplicity

    static bool factor_is_canonical(const Monomial& M);
    void den_insert(const Monomial& M, int mult);
};

}  // namespace kha
