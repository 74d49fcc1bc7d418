#include "kha/laurent.hpp"

#include <stdexcept>

namespace kha {

Laurent Laurent::constant(const Rational& c) {
    Laurent r;
    if (c != 0) r.t_.emplace(Monomial::unit(), c);
    return r;
}

Laurent Laurent::term(const Monomial& m, const Rational& c) {
    Laurent r;
    if (c != 0) r.t_.emplace(m, c);
    return r;
}

bool Laurent::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_unit() && t_.begin()->second == 1;
}

void Laurent::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Laurent Laurent::operator*(const Rational& c) const {
    if (c == 0) return Laurent();
    Laurent r = *this;
    for (auto& [m, v] : r.t_) v *= c;
    return r;
}

Laurent Laurent::mul_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return Laurent();
    Laurent r;
    for (const auto& [mm, cc] : t_) r.t_.emplace(mm * m, cc * c);
    return r;
}

// Division by 1 - M. Core algorithm assumes the pivot symbol has positive
// exponent in M; the general case reduces to it through the associate
// identity 1 - M = -M (1 - M^{-1}).
std::optional<Laurent> Laurent::div_binomial(const Monomial& M) const {
    if (is_zero()) return Laurent();
    if (M.is_unit()) return std::nullopt;  // 1 - 1 = 0, not a divisor
    Sym pivot = M.exponents().front().first;
    int e = M.exponents().front().second;
    if (e < 0) {
        // N/(1-M) = (-M^{-1} N)/(1-M^{-1})
        Laurent n = mul_monomial(M.inverse(), Rational(-1));
        return n.div_binomial(M.inverse());
    }

    // Organize by pivot exponent; repeatedly peel the minimal block.
    std::map<int, Laurent> rem = by_exponent(pivot);
    int max_level = rem.rbegin()->first;
    Laurent quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        int level = it->first;
        if (level > max_level) return std::nullopt;  // quotient degree exhausted
        Laurent block = it->second;  // coefficient in the other symbols
        rem.erase(it);
        Laurent block_term = block.mul_monomial(Monomial::of(pivot, level));
        quotient = quotient + block_term;
        // rem -= block_term * (1 - M) beyond the removed level: add block_term*M
        Laurent carry = block_term * Laurent::term(M, Rational(1));
        for (const auto& [m, c] : carry.terms()) {
            int lv = m.exp(pivot);
            Monomial rest = m * Monomial::of(pivot, -lv);
            auto [jt, ins] = rem.emplace(lv, Laurent::term(rest, c));
            if (!ins) {
                jt->second.add_term(rest, c);
                if (jt->second.is_zero()) rem.erase(jt);
            }
        }
    }
    return quotient;
}

std::optional<Laurent> Laurent::div_p_minus_q(Sym p_, Sym q_, int k) const {
    Laurent cur = *this;
    for (int round = 0; round < k; ++round) {
        if (cur.is_zero()) return cur;
        // Clear negative powers of p so the division is polynomial.
        int shift = -std::min(0, cur.min_exp(p_));
        Laurent work = cur.mul_monomial(Monomial::of(p_, shift));
        std::map<int, Laurent> by = work.by_exponent(p_);
        int deg = by.rbegin()->first;
        // Synthetic division by (p - q), highest power first:
        //   quotient_d = coeff_{d+1};  coeff_d += q * quotient_d.
        Laurent quotient;
        Laurent carry;  // running quotient coefficient
        for (int d = deg; d >= 1; --d) {
            Laurent cd = by.count(d) ? by[d] : Laurent();
            carry = cd + carry.mul_monomial(Monomial::of(q_, 1));
            quotient = quotient + carry.mul_monomial(Monomial::of(p_, d - 1));
        }
        Laurent c0 = by.count(0) ? by[0] : Laurent();
        Laurent remainder = c0 + carry.mul_monomial(Monomial::of(q_, 1));
        if (!remainder.is_zero()) return std::nullopt;
        cur = quotient.mul_monomial(Monomial::of(p_, -shift));
    }
    return cur;
}

Laurent Laurent::substitute(const std::map<Sym, Monomial>& bindings) const {
    Laurent r;
    for (const auto& [m, c] : t_) r.add_term(m.substitute(bindings), c);
    return r;
}

Laurent Laurent::derivative(Sym v) const {
    Laurent r;
    for (const auto& [m, c] : t_) {
        int e = m.exp(v);
        if (e == 0) continue;
        r.add_term(m * Monomial::of(v, -1), c * Rational(e));
    }
    return r;
}

Rational Laurent::eval(const std::map<Sym, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : t_) {
        Rational v = c;
        for (const auto& [s, e] : m.exponents()) {
            auto it = point.find(s);
            if (it == point.end())
                throw std::invalid_argument("eval: unbound symbol " + to_string(s));
            if (it->second == 0 && e < 0)
                throw std::invalid_argument("eval: zero raised to negative power");
            Rational base = it->second;
            Rational powv(1);
            for (int i = 0; i < (e < 0 ? -e : e); ++i) powv *= base;
            if (e < 0) powv = Rational(1) / powv;
            v *= powv;
        }
        total += v;
    }
    return total;
}

int Laurent::min_exp(Sym s) const {
    bool seen = false;
    int best = 0;
    for (const auto& [m, c] : t_) {
        int e = m.exp(s);
        if (!seen || e < best) best = e;
        seen = true;
    }
    return best;
}

int Laurent::max_exp(Sym s) const {
    bool seen = false;
    int best = 0;
    for (const auto& [m, c] : t_) {
        int e = m.exp(s);
        if (!seen || e > best) best = e;
        seen = true;
    }
    return best;
}

bool Laurent::contains(Sym s) const {
    for (const auto& [m, c] : t_)
        if (m.contains(s)) return true;
    return false;
}

void Laurent::collect_symbols(std::set<Sym>& out) const {
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m.exponents()) out.insert(s);
}

std::map<int, Laurent> Laurent::by_exponent(Sym s) const {
    std::map<int, Laurent> out;
    for (const auto& [m, c] : t_) {
        int e = m.exp(s);
        out[e].add_term(m * Monomial::of(s, -e), c);
    }
    return out;
}

std::string Laurent::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += m.str();
        }
    }
    return out;
}

}  // namespace kha
