#include "kha/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kha {

bool QuiverModel::has_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<const Edge*> QuiverModel::edges_between(int src, int dst) const {
    std::vector<const Edge*> out;
    for (const auto& e : edges)
        if (e.src == src && e.dst == dst) out.push_back(&e);
    return out;
}

const Edge* QuiverModel::edge_by_name(const std::string& name) const {
    for (const auto& e : edges)
        if (e.name == name) return &e;
    return nullptr;
}

void validate(const QuiverModel& q, const std::vector<PotentialWord>& potential) {
    std::set<std::string> names;
    for (const auto& e : q.edges) {
        if (!q.has_vertex(e.src) || !q.has_vertex(e.dst))
            throw Error("edge '" + e.name + "' references an unknown vertex");
        if (!names.insert(e.name).second)
            throw Error("duplicate edge name '" + e.name + "'");
    }
    std::map<std::pair<int, int>, int> counts;
    for (const auto& e : q.edges) counts[{e.src, e.dst}]++;
    for (const auto& [pair, n] : counts) {
        auto rev = counts.find({pair.second, pair.first});
        int m = rev == counts.end() ? 0 : rev->second;
        if (n != m)
            throw NotSymmetric("edge counts differ: " + std::to_string(n) + " edges " +
                               std::to_string(pair.first) + "->" + std::to_string(pair.second) +
                               " vs " + std::to_string(m) + " reversed");
    }
    for (const auto& w : potential) {
        if (w.cycle.empty()) throw PotentialNotInvariant("empty potential word");
        Monomial prod;
        int prev_dst = -1;
        int first_src = 0;
        for (std::size_t i = 0; i < w.cycle.size(); ++i) {
            const Edge* e = q.edge_by_name(w.cycle[i]);
            if (!e) throw PotentialNotInvariant("unknown edge '" + w.cycle[i] + "' in potential");
            if (i == 0)
                first_src = e->src;
            else if (e->src != prev_dst)
                throw PotentialNotInvariant("potential word is not a path at edge '" + e->name +
                                            "'");
            prev_dst = e->dst;
            prod = prod * e->weight;
        }
        if (prev_dst != first_src)
            throw PotentialNotInvariant("potential word is not a closed cycle: " + w.cycle.front() +
                                        "...");
        if (!prod.is_unit())
            throw PotentialNotInvariant("potential word starting at '" + w.cycle.front() +
                                        "' has torus weight " + prod.str());
    }
}

QuiverModel triple(const QuiverModel& q, bool full_torus) {
    QuiverModel out;
    out.vertices = q.vertices;
    Monomial qw = Monomial::of(sym_q());
    for (const auto& e : q.edges) {
        Monomial base = full_torus ? Monomial::of(Sym::parameter("q_" + e.name))
                                   : Monomial::of(Sym::parameter("t"));
        out.edges.push_back({e.name, e.src, e.dst, base * qw});
        out.edges.push_back({e.name + "_bar", e.dst, e.src, base.inverse() * qw});
    }
    for (int v : q.vertices)
        out.edges.push_back({"omega_" + std::to_string(v), v, v, qw.pow(-2)});
    return out;
}

std::vector<PotentialWord> tripled_potential(const QuiverModel& original) {
    // W̃ = Σ_e ω_{s(e)} [e, ē] = Σ_e (ω_{s(e)} e ē - ω_{s(e)} ē e ... )
    // as cyclic words; each summand must be a closed path in the triple.
    std::vector<PotentialWord> words;
    for (const auto& e : original.edges) {
        std::string omega = "omega_" + std::to_string(e.src);
        words.push_back({{omega, e.name + "_bar", e.name}, Rational(1)});
        words.push_back({{omega, e.name, e.name + "_bar"}, Rational(-1)});
    }
    return words;
}

RatFunc zeta_at(const QuiverModel& q, int i, int i2, const Monomial& arg) {
    RatFunc r = RatFunc::one();
    Monomial inv = arg.inverse();
    for (const Edge* e : q.edges_between(i, i2))
        r = r.mul_laurent(Laurent::one() - Laurent::term(e->weight.inverse() * inv, Rational(1)));
    if (i == i2) r.mul_binomial_inv(inv);
    return r;
}

RatFunc zeta_factor(const QuiverModel& q, int i, int i2, Sym z) {
    return zeta_at(q, i, i2, Monomial::of(z));
}

RatFunc tau_factor(const QuiverModel& q, int i, int i2, Sym z) {
    Monomial m = Monomial::of(z);
    RatFunc num = zeta_at(q, i2, i, m);
    RatFunc den = zeta_at(q, i, i2, m.inverse());
    return (num * den.inverse()).simplified();
}

RatFunc zeta_tilde(const QuiverModel& q, int i, int i2, bool diagonal_pair, const Monomial& arg) {
    if (!diagonal_pair) return zeta_at(q, i, i2, arg);
    RatFunc r = RatFunc::one();
    for (const Edge* e : q.edges_between(i, i)) {
        if (e->weight.is_unit())
            throw DegenerateWeight("loop '" + e->name + "' at vertex " + std::to_string(i) +
                                   " has unit torus weight");
        r = r.mul_laurent(Laurent::one() -
                          Laurent::term(e->weight.inverse(), Rational(1)));
    }
    return r;
}

RatFunc mu_at(const Monomial& arg) {
    Monomial inv = arg.inverse();
    Laurent num = Laurent::one() - Laurent::term(Monomial::of(sym_p(), 2) * inv, Rational(1));
    RatFunc r{num};
    r.mul_binomial_inv(Monomial::of(sym_q(), 2) * inv);
    return r;
}

RatFunc mu_factor(Sym z) { return mu_at(Monomial::of(z)); }

}  // namespace kha
