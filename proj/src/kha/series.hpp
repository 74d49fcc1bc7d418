#pragma once

#include <set>
#include <string>

#include "kha/ratfunc.hpp"

namespace kha {

// Region directing a series expansion: a partition of (the relevant)
// variables into SMALL and LARGE. The ratio-degree of a monomial is its
// total degree in the SMALL symbols — the filtration weight of the
// completion; expansions are truncated at ratio-degree <= order.
struct Region {
    std::set<Sym> small;
    std::set<Sym> large;

    int ratio_degree(const Monomial& m) const {
        int d = 0;
        for (const auto& [s, e] : m.exponents())
            if (small.count(s)) d += e;
        return d;
    }
};

// Truncated formal expansion: Laurent terms of ratio-degree <= order.
// Arithmetic keeps the minimum of the operand orders.
class TruncatedSeries {
public:
    TruncatedSeries(Region region, int order) : region_(std::move(region)), order_(order) {}
    TruncatedSeries(Region region, int order, Laurent terms);

    int order() const { return order_; }
    const Region& region() const { return region_; }
    const Laurent& terms() const { return terms_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries mul_laurent(const Laurent& l) const;
    TruncatedSeries operator*(const Rational& c) const;
    TruncatedSeries truncated(int new_order) const;

    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }

    std::string str() const { return terms_.str(); }

private:
    Region region_;
    int order_;
    Laurent terms_;

    Laurent drop_beyond(const Laurent& l, int order) const;
};

// Region-directed expansion of f to ratio-degree <= order. Denominator
// factors whose monomial has negative ratio-degree are first rewritten by
// the exact associate identity so the geometric expansion converges;
// factors of ratio-degree 0 raise NonExpandableFactor.
TruncatedSeries expand_series(const RatFunc& f, const Region& region, int order);

}  // namespace kha
