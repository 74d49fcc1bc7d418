#include "kha/series.hpp"

namespace kha {

TruncatedSeries::TruncatedSeries(Region region, int order, Laurent terms)
    : region_(std::move(region)), order_(order) {
    terms_ = drop_beyond(terms, order_);
}

Laurent TruncatedSeries::drop_beyond(const Laurent& l, int order) const {
    Laurent out;
    for (const auto& [m, c] : l.terms())
        if (region_.ratio_degree(m) <= order) out.add_term(m, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int n = std::min(order_, o.order_);
    return TruncatedSeries(region_, n, terms_ + o.terms_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int n = std::min(order_, o.order_);
    return TruncatedSeries(region_, n, terms_ * o.terms_);
}

TruncatedSeries TruncatedSeries::mul_laurent(const Laurent& l) const {
    return TruncatedSeries(region_, order_, terms_ * l);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    return TruncatedSeries(region_, order_, terms_ * c);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    return TruncatedSeries(region_, std::min(order_, new_order), terms_);
}

TruncatedSeries expand_series(const RatFunc& f, const Region& region, int order) {
    if (f.is_zero()) return TruncatedSeries(region, order);

    // Orient every denominator factor to strictly positive ratio-degree.
    Laurent numer = f.num();
    std::vector<std::pair<Monomial, int>> factors;
    for (const auto& [M, k] : f.den()) {
        int d = region.ratio_degree(M);
        if (d > 0) {
            factors.emplace_back(M, k);
        } else if (d < 0) {
            // 1/(1-M) = -M^{-1}/(1-M^{-1})
            factors.emplace_back(M.inverse(), k);
            numer = numer.mul_monomial(M.inverse().pow(k), Rational(k % 2 == 0 ? 1 : -1));
        } else {
            throw NonExpandableFactor("factor 1 - " + M.str() +
                                      " has ratio-degree 0 in the region");
        }
    }

    // The numerator may reach below degree 0; expand each geometric series
    // far enough that products still fill ratio-degree <= order.
    int base = 0;
    for (const auto& [m, c] : numer.terms()) base = std::min(base, region.ratio_degree(m));
    int need = order - base;
    if (need < 0) return TruncatedSeries(region, order);

    Laurent acc = numer;
    for (const auto& [M, k] : factors) {
        // 1/(1-M)^k = sum_j C(k-1+j, j) M^j
        Laurent series;
        Rational coef(1);
        Monomial mj = Monomial::unit();
        int dM = region.ratio_degree(M);
        for (int j = 0; dM * j <= need; ++j) {
            if (j > 0) {
                coef = coef * Rational(k - 1 + j) / Rational(j);
                mj = mj * M;
            }
            series.add_term(mj, coef);
        }
        acc = acc * series;
        // Trim as we go to keep intermediate products small.
        Laurent trimmed;
        for (const auto& [m, c] : acc.terms())
            if (region.ratio_degree(m) <= order) trimmed.add_term(m, c);
        acc = trimmed;
    }
    return TruncatedSeries(region, order, acc);
}

}  // namespace kha
