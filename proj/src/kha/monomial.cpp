#include "kha/monomial.hpp"

#include <algorithm>

namespace kha {

Monomial Monomial::of(Sym s, int exp) {
    Monomial m;
    if (exp != 0) m.e_.emplace_back(s, exp);
    return m;
}

int Monomial::exp(const Sym& s) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), s,
                               [](const auto& p, const Sym& x) { return p.first < x; });
    if (it != e_.end() && it->first == s) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            r.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            r.e_.push_back(*b++);
        } else {
            int s = a->second + b->second;
            if (s != 0) r.e_.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_ = e_;
    for (auto& [s, e] : r.e_) e *= k;
    return r;
}

Monomial Monomial::substitute(const std::map<Sym, Monomial>& bindings) const {
    Monomial r;
    for (const auto& [s, e] : e_) {
        auto it = bindings.find(s);
        if (it == bindings.end())
            r = r * Monomial::of(s, e);
        else
            r = r * it->second.pow(e);
    }
    return r;
}

int Monomial::degree_where(const std::function<bool(const Sym&)>& pred) const {
    int d = 0;
    for (const auto& [s, e] : e_)
        if (pred(s)) d += e;
    return d;
}

bool Monomial::has_variables() const {
    for (const auto& [s, e] : e_)
        if (s.is_var()) return true;
    return false;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    auto i = a.e_.begin();
    auto j = b.e_.begin();
    while (i != a.e_.end() || j != b.e_.end()) {
        int ea, eb;
        if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first)) {
            ea = i->second;
            eb = 0;
            ++i;
        } else if (i == a.e_.end() || j->first < i->first) {
            ea = 0;
            eb = j->second;
            ++j;
        } else {
            ea = i->second;
            eb = j->second;
            ++i;
            ++j;
        }
        if (ea != eb) return ea > eb ? -1 : 1;  // larger exponent first
    }
    return 0;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [s, e] : e_) {
        if (!first) out += "*";
        first = false;
        out += to_string(s);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace kha
