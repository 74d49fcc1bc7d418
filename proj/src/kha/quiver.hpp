#pragma once

#include <string>
#include <vector>

#include "kha/ratfunc.hpp"

namespace kha {

struct Edge {
    std::string name;
    int src = 0;
    int dst = 0;
    Monomial weight;  // torus weight q_eps, a monomial in parameter symbols
};

// Symmetric quiver with torus weights per edge; the source of every
// zeta/tau/zeta-tilde/mu factor.
struct QuiverModel {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    bool has_vertex(int v) const;
    std::vector<const Edge*> edges_between(int src, int dst) const;
    const Edge* edge_by_name(const std::string& name) const;
};

// A potential word: a closed cycle of edges with a rational coefficient.
// Enters validation only; never influences computation.
struct PotentialWord {
    std::vector<std::string> cycle;
    Rational coeff = Rational(1);
};

// Checks symmetry (equal edge counts in both directions for every ordered
// vertex pair) and T-invariance of every potential word (the product of its
// edge weights is the unit monomial). Throws NotSymmetric or
// PotentialNotInvariant.
void validate(const QuiverModel& q, const std::vector<PotentialWord>& potential = {});

// The tripled quiver: E ⊔ Ē ⊔ {ω_i} with weights e -> q_e·q (or t·q in the
// minimal torus), ē -> q_e⁻¹·q (t⁻¹·q), ω_i -> q⁻². The input need not be
// symmetric; the output always is.
QuiverModel triple(const QuiverModel& q, bool full_torus);

// Canonical potential words of W̃ = Σ_e ω_{s(e)} [e, ē] for a tripled quiver.
std::vector<PotentialWord> tripled_potential(const QuiverModel& original);

// ζ_{ii'}(arg) = ∏_{ε: i→i'} (1 - q_ε⁻¹ arg⁻¹) / (1 - arg⁻¹)^{δ_{ii'}}.
RatFunc zeta_at(const QuiverModel& q, int i, int i2, const Monomial& arg);
RatFunc zeta_factor(const QuiverModel& q, int i, int i2, Sym z);

// τ_{ii'}(z) = ζ_{i'i}(z) / ζ_{ii'}(z⁻¹), simplified.
RatFunc tau_factor(const QuiverModel& q, int i, int i2, Sym z);

// ζ̃: the zeta factor off the diagonal, the constant ∏(1 - q_ε⁻¹) over the
// loops at i when (i,j) = (i',j'). Throws DegenerateWeight if a loop weight
// is the unit monomial.
RatFunc zeta_tilde(const QuiverModel& q, int i, int i2, bool diagonal_pair, const Monomial& arg);

// μ(arg) = (1 - p² arg⁻¹) / (1 - q² arg⁻¹); vertex-independent.
RatFunc mu_at(const Monomial& arg);
RatFunc mu_factor(Sym z);

}  // namespace kha
