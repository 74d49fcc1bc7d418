#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kha/symbols.hpp"

namespace kha {

// A Laurent monomial: finitely many symbols with nonzero integer exponents,
// kept sorted by symbol. The empty map is the unit monomial. Coefficients
// live in LaurentPoly, never here.
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial of(Sym s, int exp = 1);

    bool is_unit() const { return e_.empty(); }
    int exp(const Sym& s) const;
    const std::vector<std::pair<Sym, int>>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial pow(int k) const;
    Monomial inverse() const { return pow(-1); }

    // Image under symbol -> monomial bindings; unbound symbols map to
    // themselves.
    Monomial substitute(const std::map<Sym, Monomial>& bindings) const;

    // Sum of exponents of symbols accepted by the predicate.
    int degree_where(const std::function<bool(const Sym&)>& pred) const;

    bool contains(const Sym& s) const { return exp(s) != 0; }
    bool has_variables() const;

    // Canonical term order: walk the merged symbol sequence in Sym order;
    // at the first symbol where exponents differ, the larger exponent comes
    // first. Yields "1 + q^-1" style ordering (unit before negative powers).
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str() const;  // "q^-1*z[0,1]^2", "1" for the unit

private:
    std::vector<std::pair<Sym, int>> e_;
};

}  // namespace kha
