#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kha/quiver.hpp"
#include "kha/series.hpp"

namespace kha {

// Dimension vector d in N^I; zero entries are not stored.
struct DimVec {
    std::map<int, int> counts;

    static DimVec zero() { return DimVec(); }
    static DimVec unit(int vertex) {
        DimVec d;
        d.counts[vertex] = 1;
        return d;
    }

    int at(int vertex) const {
        auto it = counts.find(vertex);
        return it == counts.end() ? 0 : it->second;
    }
    void set(int vertex, int n);
    int total() const;
    bool is_zero() const { return counts.empty(); }
    bool componentwise_leq(const DimVec& o) const;

    DimVec operator+(const DimVec& o) const;
    DimVec operator-(const DimVec& o) const;  // assumes componentwise >=
    bool operator==(const DimVec& o) const { return counts == o.counts; }
    bool operator!=(const DimVec& o) const { return !(*this == o); }
    bool operator<(const DimVec& o) const { return counts < o.counts; }

    // Product of factorials of the entries, as a rational.
    Rational factorial() const;

    // All splits a with 0 <= a <= d componentwise, deterministic order.
    std::vector<DimVec> splits() const;

    // Variables z[i,1..d_i] in lex (vertex, slot) order.
    std::vector<Sym> variables() const;

    std::string str() const;
};

// An element of the shuffle model: degree vector plus an S_d-symmetric
// rational function of the z[i,1..d_i]. Values are stored simplified.
class ShuffleElement {
public:
    struct Unchecked {};  // internal: skip the symmetry check

    ShuffleElement() : value_(RatFunc::one()) {}  // unit, degree 0
    ShuffleElement(DimVec dim, RatFunc value);
    ShuffleElement(DimVec dim, RatFunc value, Unchecked);

    const DimVec& dim() const { return dim_; }
    const RatFunc& value() const { return value_; }

    bool is_polynomial_class() const { return value_.den_empty(); }
    void require_polynomial_class(const std::string& who) const;

    bool is_symmetric() const;

    std::string str() const;

private:
    DimVec dim_;
    RatFunc value_;

    void check_symbols() const;
};

// Relabeled restriction to a split a + b = dim: slots <= a_i form the left
// (x) block, slots > a_i the right (y) block. The value of a plain
// restriction is exact; raw coproducts carry a region-expanded series.
struct SplitElement {
    DimVec left;
    DimVec right;
    RatFunc exact;                          // restrict_split result
    std::optional<TruncatedSeries> series;  // engaged by the raw coproducts
};

ShuffleElement shuffle_unit();

// Shuffle product: the symmetrized coset sum with zeta kernels. When both
// inputs are polynomial class the diagonal poles must cancel; otherwise
// NonPolynomialProduct is thrown.
ShuffleElement shuffle_product(const QuiverModel& q, const ShuffleElement& x,
                               const ShuffleElement& y);

SplitElement restrict_split(const ShuffleElement& x, const DimVec& a, const DimVec& b);

// Raw coproducts: restrict, divide by the complementary zeta product, and
// expand in the region |x| << |y| (left block small) to the given order.
SplitElement coproduct_raw_geq(const QuiverModel& q, const ShuffleElement& x, const DimVec& a,
                               const DimVec& b, int order);
SplitElement coproduct_raw_leq(const QuiverModel& q, const ShuffleElement& x, const DimVec& a,
                               const DimVec& b, int order);

// Internal helpers shared with the extended/pairing modules.
namespace detail {

// All per-vertex sorted subsets realizing the split a of d, as slot lists.
struct Coset {
    std::map<int, std::vector<int>> a_slots;
    std::map<int, std::vector<int>> b_slots;
};
std::vector<Coset> enumerate_cosets(const DimVec& d, const DimVec& a);

// Multiplies f by 1/zeta_{ii'}(num_var/den_var) for the given slot pairs.
// `pairs` lists ((i, j), (i', j')) with the argument z_{ij}/z_{i'j'}.
RatFunc divide_by_zeta_product(
    const QuiverModel& q, RatFunc f,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& pairs);

Region split_region(const DimVec& d, const DimVec& a);

}  // namespace detail

}  // namespace kha
