#include "kha/shuffle.hpp"

#include <algorithm>

namespace kha {

void DimVec::set(int vertex, int n) {
    if (n == 0)
        counts.erase(vertex);
    else
        counts[vertex] = n;
}

int DimVec::total() const {
    int t = 0;
    for (const auto& [v, n] : counts) t += n;
    return t;
}

bool DimVec::componentwise_leq(const DimVec& o) const {
    for (const auto& [v, n] : counts)
        if (n > o.at(v)) return false;
    return true;
}

DimVec DimVec::operator+(const DimVec& o) const {
    DimVec r = *this;
    for (const auto& [v, n] : o.counts) r.set(v, r.at(v) + n);
    return r;
}

DimVec DimVec::operator-(const DimVec& o) const {
    DimVec r = *this;
    for (const auto& [v, n] : o.counts) r.set(v, r.at(v) - n);
    return r;
}

Rational DimVec::factorial() const {
    Rational f(1);
    for (const auto& [v, n] : counts)
        for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

std::vector<DimVec> DimVec::splits() const {
    std::vector<DimVec> out{DimVec::zero()};
    for (const auto& [v, n] : counts) {
        std::vector<DimVec> next;
        for (const auto& base : out)
            for (int k = 0; k <= n; ++k) {
                DimVec d = base;
                d.set(v, k);
                next.push_back(d);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Sym> DimVec::variables() const {
    std::vector<Sym> out;
    for (const auto& [v, n] : counts)
        for (int j = 1; j <= n; ++j) out.push_back(Sym::var(v, j));
    return out;
}

std::string DimVec::str() const {
    std::string s = "(";
    bool first = true;
    for (const auto& [v, n] : counts) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(v) + ":" + std::to_string(n);
    }
    return s + ")";
}

ShuffleElement::ShuffleElement(DimVec dim, RatFunc value)
    : dim_(std::move(dim)), value_(value.simplified()) {
    check_symbols();
    if (!is_symmetric())
        throw Error("shuffle element of degree " + dim_.str() +
                    " is not symmetric under slot transpositions");
}

ShuffleElement::ShuffleElement(DimVec dim, RatFunc value, Unchecked)
    : dim_(std::move(dim)), value_(value.simplified()) {
    check_symbols();
}

void ShuffleElement::check_symbols() const {
    std::set<Sym> syms;
    value_.collect_symbols(syms);
    for (const auto& s : syms) {
        if (!s.is_var()) continue;
        if (s.slot < 1 || s.slot > dim_.at(s.vertex))
            throw Error("variable " + to_string(s) + " is out of range for degree " + dim_.str());
    }
}

bool ShuffleElement::is_symmetric() const {
    for (const auto& [v, n] : dim_.counts) {
        for (int j = 1; j < n; ++j) {
            std::map<Sym, Monomial> swap{
                {Sym::var(v, j), Monomial::of(Sym::var(v, j + 1))},
                {Sym::var(v, j + 1), Monomial::of(Sym::var(v, j))},
            };
            if (!value_.substitute(swap).equals(value_)) return false;
        }
    }
    return true;
}

void ShuffleElement::require_polynomial_class(const std::string& who) const {
    if (!is_polynomial_class())
        throw Error(who + " requires a polynomial-class element, got " + value_.str());
}

std::string ShuffleElement::str() const {
    return "deg " + dim_.str() + ": " + value_.str();
}

ShuffleElement shuffle_unit() { return ShuffleElement(); }

namespace detail {

namespace {

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    // sorted k-subsets of {1..n} in lexicographic order
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<Coset> enumerate_cosets(const DimVec& d, const DimVec& a) {
    std::vector<Coset> cosets{Coset{}};
    for (const auto& [v, n] : d.counts) {
        int k = a.at(v);
        std::vector<std::vector<int>> choices;
        subsets_of(n, k, choices);
        std::vector<Coset> next;
        for (const auto& base : cosets)
            for (const auto& pick : choices) {
                Coset c = base;
                c.a_slots[v] = pick;
                std::vector<int> rest;
                for (int j = 1; j <= n; ++j)
                    if (std::find(pick.begin(), pick.end(), j) == pick.end()) rest.push_back(j);
                c.b_slots[v] = rest;
                next.push_back(c);
            }
        cosets = std::move(next);
    }
    return cosets;
}

RatFunc divide_by_zeta_product(
    const QuiverModel& q, RatFunc f,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& pairs) {
    for (const auto& [top, bot] : pairs) {
        auto [i, j] = top;
        auto [i2, j2] = bot;
        Monomial arg = Monomial::of(Sym::var(i, j)) * Monomial::of(Sym::var(i2, j2), -1);
        // 1/zeta_{ii'}(arg) = (1 - arg^{-1})^{delta} / prod (1 - w^{-1} arg^{-1})
        if (i == i2) f.mul_binomial(arg.inverse());
        for (const Edge* e : q.edges_between(i, i2))
            f.mul_binomial_inv(e->weight.inverse() * arg.inverse());
    }
    return f;
}

Region split_region(const DimVec& d, const DimVec& a) {
    Region r;
    for (const auto& [v, n] : d.counts)
        for (int j = 1; j <= n; ++j) {
            if (j <= a.at(v))
                r.small.insert(Sym::var(v, j));
            else
                r.large.insert(Sym::var(v, j));
        }
    return r;
}

}  // namespace detail

ShuffleElement shuffle_product(const QuiverModel& q, const ShuffleElement& x,
                               const ShuffleElement& y) {
    if (x.dim().is_zero())
        return ShuffleElement(y.dim(), y.value() * x.value(), ShuffleElement::Unchecked{});
    if (y.dim().is_zero())
        return ShuffleElement(x.dim(), x.value() * y.value(), ShuffleElement::Unchecked{});

    DimVec d = x.dim() + y.dim();
    RatFunc sum;
    for (const auto& coset : detail::enumerate_cosets(d, x.dim())) {
        // Embed x into the A slots and y into the B slots.
        std::map<Sym, Monomial> bx, by;
        for (const auto& [v, slots] : coset.a_slots)
            for (std::size_t j = 0; j < slots.size(); ++j)
                bx[Sym::var(v, static_cast<int>(j) + 1)] = Monomial::of(Sym::var(v, slots[j]));
        for (const auto& [v, slots] : coset.b_slots)
            for (std::size_t j = 0; j < slots.size(); ++j)
                by[Sym::var(v, static_cast<int>(j) + 1)] = Monomial::of(Sym::var(v, slots[j]));
        RatFunc term = x.value().substitute(bx) * y.value().substitute(by);
        for (const auto& [i, aslots] : coset.a_slots)
            for (int j : aslots)
                for (const auto& [i2, bslots] : coset.b_slots)
                    for (int j2 : bslots) {
                        Monomial arg = Monomial::of(Sym::var(i, j)) *
                                       Monomial::of(Sym::var(i2, j2), -1);
                        term = term * zeta_at(q, i, i2, arg);
                    }
        sum = sum + term;
    }
    sum = sum.simplified();
    if (x.is_polynomial_class() && y.is_polynomial_class() && !sum.den_empty())
        throw NonPolynomialProduct("diagonal poles failed to cancel in shuffle product: " +
                                   sum.str());
    return ShuffleElement(d, sum, ShuffleElement::Unchecked{});
}

SplitElement restrict_split(const ShuffleElement& x, const DimVec& a, const DimVec& b) {
    if (a + b != x.dim())
        throw DimensionMismatch("split " + a.str() + " + " + b.str() +
                                " does not sum to degree " + x.dim().str());
    // In the slot convention the relabeling is the identity: slots <= a_i
    // are the x block, slots > a_i the y block.
    return SplitElement{a, b, x.value(), std::nullopt};
}

namespace {

SplitElement coproduct_raw(const QuiverModel& q, const ShuffleElement& x, const DimVec& a,
                           const DimVec& b, int order, bool geq) {
    x.require_polynomial_class(geq ? "coproduct_raw_geq" : "coproduct_raw_leq");
    SplitElement s = restrict_split(x, a, b);
    const DimVec& d = x.dim();
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
    for (const auto& [i, ni] : d.counts)
        for (const auto& [i2, ni2] : d.counts)
            for (int j = 1; j <= ni; ++j)
                for (int j2 = 1; j2 <= ni2; ++j2) {
                    bool j_in_y = j > a.at(i);
                    bool j2_in_x = j2 <= a.at(i2);
                    // geq: zeta_{ii'}(z_{ij}/z_{i'j'}) over j > a_i, j' <= a_{i'};
                    // leq: the complementary product over j <= a_i, j' > a_{i'}.
                    bool take = geq ? (j_in_y && j2_in_x) : (!j_in_y && !j2_in_x);
                    if (take) pairs.push_back({{i, j}, {i2, j2}});
                }
    RatFunc f = detail::divide_by_zeta_product(q, RatFunc(s.exact), pairs);
    Region region = detail::split_region(d, a);
    s.series = expand_series(f, region, order);
    return s;
}

}  // namespace

SplitElement coproduct_raw_geq(const QuiverModel& q, const ShuffleElement& x, const DimVec& a,
                               const DimVec& b, int order) {
    return coproduct_raw(q, x, a, b, order, true);
}

SplitElement coproduct_raw_leq(const QuiverModel& q, const ShuffleElement& x, const DimVec& a,
                               const DimVec& b, int order) {
    return coproduct_raw(q, x, a, b, order, false);
}

}  // namespace kha
