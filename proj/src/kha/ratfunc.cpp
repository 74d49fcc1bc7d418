#include "kha/ratfunc.hpp"

#include <algorithm>

namespace kha {

namespace {

Laurent binomial(const Monomial& M) {
    Laurent l = Laurent::one();
    l.add_term(M, Rational(-1));
    return l;
}

}  // namespace

Laurent RatFunc::den_expanded() const {
    Laurent d = Laurent::one();
    for (const auto& [M, k] : den_)
        for (int i = 0; i < k; ++i) d = d * binomial(M);
    return d;
}

bool RatFunc::factor_is_canonical(const Monomial& M) {
    return M.exponents().front().second > 0;
}

void RatFunc::den_insert(const Monomial& M, int mult) {
    auto it = den_.find(M);
    if (it == den_.end())
        den_.emplace(M, mult);
    else
        it->second += mult;
}

RatFunc& RatFunc::mul_binomial_inv(const Monomial& M, int mult) {
    if (M.is_unit()) throw DenominatorVanishes("denominator factor 1 - 1");
    if (num_.is_zero()) return *this;
    if (factor_is_canonical(M)) {
        den_insert(M, mult);
    } else {
        // 1/(1-M) = -M^{-1} / (1 - M^{-1})
        den_insert(M.inverse(), mult);
        Monomial u = M.inverse().pow(mult);
        num_ = num_.mul_monomial(u, Rational(mult % 2 == 0 ? 1 : -1));
    }
    return *this;
}

RatFunc& RatFunc::mul_binomial(const Monomial& M, int mult) {
    for (int i = 0; i < mult; ++i) num_ = num_ * binomial(M);
    return *this;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common denominator: factorwise maximum of multiplicities.
    RatFunc r;
    std::map<Monomial, int> lcm = den_;
    for (const auto& [M, k] : o.den_) {
        auto it = lcm.find(M);
        if (it == lcm.end())
            lcm.emplace(M, k);
        else
            it->second = std::max(it->second, k);
    }
    Laurent a = num_;
    Laurent b = o.num_;
    for (const auto& [M, k] : lcm) {
        auto ita = den_.find(M);
        int ka = ita == den_.end() ? 0 : ita->second;
        for (int i = 0; i < k - ka; ++i) a = a * binomial(M);
        auto itb = o.den_.find(M);
        int kb = itb == o.den_.end() ? 0 : itb->second;
        for (int i = 0; i < k - kb; ++i) b = b * binomial(M);
    }
    r.num_ = a + b;
    if (!r.num_.is_zero()) r.den_ = std::move(lcm);
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc r;
    r.num_ = num_ * o.num_;
    if (r.num_.is_zero()) return r;
    r.den_ = den_;
    for (const auto& [M, k] : o.den_) r.den_insert(M, k);
    return r;
}

RatFunc RatFunc::operator*(const Rational& c) const {
    if (c == 0) return RatFunc();
    RatFunc r = *this;
    r.num_ = r.num_ * c;
    return r;
}

RatFunc RatFunc::mul_laurent(const Laurent& l) const {
    RatFunc r;
    r.num_ = num_ * l;
    if (!r.num_.is_zero()) r.den_ = den_;
    return r;
}

RatFunc RatFunc::mul_monomial(const Monomial& m, const Rational& c) const {
    RatFunc r;
    r.num_ = num_.mul_monomial(m, c);
    if (!r.num_.is_zero()) r.den_ = den_;
    return r;
}

RatFunc RatFunc::simplified() const {
    RatFunc r = *this;
    if (r.num_.is_zero()) {
        r.den_.clear();
        return r;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = r.den_.begin(); it != r.den_.end();) {
            bool erased = false;
            while (it->second > 0) {
                auto q = r.num_.div_binomial(it->first);
                if (!q) break;
                r.num_ = std::move(*q);
                --it->second;
                progress = true;
                if (r.num_.is_zero()) {
                    r.den_.clear();
                    return r;
                }
            }
            if (it->second == 0) {
                it = r.den_.erase(it);
                erased = true;
            }
            if (!erased) ++it;
        }
    }
    return r;
}

bool RatFunc::equals(const RatFunc& o) const {
    // Cross-multiply only by the factors the other side does not share.
    Laurent a = num_;
    Laurent b = o.num_;
    for (const auto& [M, k] : o.den_) {
        auto it = den_.find(M);
        int mine = it == den_.end() ? 0 : it->second;
        for (int i = 0; i < k - mine; ++i) a = a * binomial(M);
    }
    for (const auto& [M, k] : den_) {
        auto it = o.den_.find(M);
        int theirs = it == o.den_.end() ? 0 : it->second;
        for (int i = 0; i < k - theirs; ++i) b = b * binomial(M);
    }
    return a == b;
}

RatFunc RatFunc::substitute(const std::map<Sym, Monomial>& bindings) const {
    RatFunc r;
    r.num_ = num_.substitute(bindings);
    for (const auto& [M, k] : den_) {
        Monomial img = M.substitute(bindings);
        if (img.is_unit())
            throw DenominatorVanishes("denominator factor 1 - " + M.str() +
                                      " vanishes under substitution");
        r.mul_binomial_inv(img, k);
    }
    return r.simplified();
}

RatFunc RatFunc::derivative(Sym v) const {
    // d/dv [ N / prod (1-M_k)^{m_k} ]
    //   = N' / D + sum_k m_k e_v(M_k) N M_k / (v D (1-M_k))
    RatFunc result;
    RatFunc base;
    base.num_ = num_.derivative(v);
    if (!base.num_.is_zero()) base.den_ = den_;
    result = base;
    for (const auto& [M, k] : den_) {
        int e = M.exp(v);
        if (e == 0) continue;
        RatFunc piece;
        piece.num_ = num_.mul_monomial(M * Monomial::of(v, -1), Rational(k * e));
        piece.den_ = den_;
        piece.den_insert(M, 1);
        result = result + piece;
    }
    return result;
}

Rational RatFunc::eval(const std::map<Sym, Rational>& point) const {
    Rational n = num_.eval(point);
    Rational d(1);
    for (const auto& [M, k] : den_) {
        Rational f = binomial(M).eval(point);
        if (f == 0) throw DenominatorVanishes("denominator vanishes at evaluation point");
        for (int i = 0; i < k; ++i) d *= f;
    }
    return n / d;
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw NonBinomialDenominator("division by zero");
    // Factor the numerator as c * monomial * prod (1 - M_i).
    Laurent rest = num_;
    std::vector<Monomial> factors;
    while (!rest.is_monomial()) {
        if (rest.term_count() > 64)
            throw NonBinomialDenominator("divisor too large to factor into binomials");
        const auto& lead = *rest.terms().begin();
        bool found = false;
        for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it) {
            if (it->second != -lead.second) continue;
            Monomial cand = it->first * lead.first.inverse();
            auto q = rest.div_binomial(cand);
            if (q) {
                factors.push_back(cand);
                rest = std::move(*q);
                found = true;
                break;
            }
        }
        if (!found)
            throw NonBinomialDenominator(
                "divisor is not a product of binomials 1 - monomial: " + num_.str());
    }
    const auto& [m, c] = *rest.terms().begin();
    RatFunc r;
    r.num_ = den_expanded().mul_monomial(m.inverse(), Rational(1) / c);
    for (const auto& M : factors) r.mul_binomial_inv(M);
    return r;
}

RatFunc RatFunc::limit_p_to_q() const {
    Sym P = sym_p(), Q = sym_q();
    std::map<Sym, Monomial> p_to_q{{P, Monomial::of(Q, 1)}};

    // Split denominator factors into those vanishing at p = q (necessarily
    // of the form 1 - (p/q)^e) and the rest.
    int vanish_order = 0;
    Laurent unit_scale = Laurent::one();  // product of the S_e(q,q) normalizers
    std::map<Monomial, int> rest;
    for (const auto& [M, k] : den_) {
        if (!M.substitute(p_to_q).is_unit()) {
            rest[M] += k;
            continue;
        }
        int e = M.exp(P);
        // M = (p/q)^e. For e > 0: 1 - M = -q^{-e} (p - q) S_e(p, q) with
        // S_e(q,q) = e q^{e-1}; for e < 0 (u = -e): 1 - M = p^{-u} (p - q) S_u.
        vanish_order += k;
        int u = e > 0 ? e : -e;
        Rational sign(e > 0 ? -1 : 1);
        // (unit * S)(q, q) = sign-adjusted e * q^{-1} (for e>0: -e q^{-1};
        // for e<0: u q^{-1}), derived from q^{+-...} * u q^{u-1}.
        Laurent s = Laurent::term(Monomial::of(Q, -1), sign * Rational(u));
        for (int i = 0; i < k; ++i) unit_scale = unit_scale * s;
    }

    if (vanish_order == 0 && !num_.contains(P)) {
        // p may still sit in non-vanishing factors' monomials.
        bool den_has_p = false;
        for (const auto& [M, k] : rest)
            if (M.contains(P)) den_has_p = true;
        if (!den_has_p) return *this;
    }

    Laurent n = num_;
    if (vanish_order > 0) {
        auto q = n.div_p_minus_q(P, Q, vanish_order);
        if (!q)
            throw PoleAtPEqualsQ("denominator vanishes to order " +
                                 std::to_string(vanish_order) +
                                 " at p = q but numerator does not");
        n = std::move(*q);
    }
    n = n.substitute(p_to_q);

    RatFunc r(n);
    // Divide by the unit_scale monomial (a single term c * q^t).
    const auto& [um, uc] = *unit_scale.terms().begin();
    r.num_ = r.num_.mul_monomial(um.inverse(), Rational(1) / uc);
    for (const auto& [M, k] : rest) {
        Monomial img = M.substitute(p_to_q);
        if (img.is_unit())
            throw PoleAtPEqualsQ("unexpected vanishing factor after p -> q");
        r.mul_binomial_inv(img, k);
    }
    return r.simplified();
}

void RatFunc::collect_symbols(std::set<Sym>& out) const {
    num_.collect_symbols(out);
    for (const auto& [M, k] : den_)
        for (const auto& [s, e] : M.exponents()) out.insert(s);
}

bool RatFunc::contains(Sym s) const {
    if (num_.contains(s)) return true;
    for (const auto& [M, k] : den_)
        if (M.contains(s)) return true;
    return false;
}

std::string RatFunc::str() const {
    std::string n = num_.str();
    if (den_.empty()) return n;
    std::string d;
    for (const auto& [M, k] : den_) {
        d += "(1 - " + M.str() + ")";
        if (k != 1) d += "^" + std::to_string(k);
        d += "*";
    }
    d.pop_back();
    bool wrap = num_.term_count() > 1;
    return (wrap ? "(" + n + ")" : n) + " / (" + d + ")";
}

}  // namespace kha
