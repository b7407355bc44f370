#include "srpowers/polarization.hpp"

#include <algorithm>
#include <map>

namespace srpowers {

PolarContext::PolarContext(int source_arity, std::vector<int> bounds) : n_(source_arity), bounds_(std::move(bounds)) {
    if (static_cast<int>(bounds_.size()) != n_) throw Error("polar context: bounds size must match source arity");
    int max_layer = 0;
    for (int b : bounds_) {
        if (b < 0) throw Error("polar context: negative bound");
        max_layer = std::max(max_layer, b);
    }
    idx_.assign(n_, {});
    for (int i = 0; i < n_; ++i) idx_[i].assign(bounds_[i], -1);
    for (int j = 1; j <= max_layer; ++j)
        for (int i = 1; i <= n_; ++i)
            if (bounds_[i - 1] >= j) {
                idx_[i - 1][j - 1] = static_cast<int>(flat_.size());
                flat_.push_back({i, j});
            }
}

PolarContext PolarContext::uniform(int source_arity, int layers) {
    return PolarContext(source_arity, std::vector<int>(source_arity, layers));
}

PolarContext PolarContext::for_ideal(const MonomialIdeal& ideal) {
    std::vector<int> bounds(ideal.arity(), 0);
    for (const auto& g : ideal.generators())
        for (int v = 1; v <= ideal.arity(); ++v) bounds[v - 1] = std::max(bounds[v - 1], g.exponent(v));
    return PolarContext(ideal.arity(), std::move(bounds));
}

bool PolarContext::admissible(int source, int layer) const {
    return source >= 1 && source <= n_ && layer >= 1 && layer <= bounds_[source - 1];
}

int PolarContext::index(int source, int layer) const {
    if (!admissible(source, layer))
        throw Error("polar variable (" + std::to_string(source) + "," + std::to_string(layer) + ") not admissible");
    return idx_[source - 1][layer - 1];
}

std::string PolarContext::variable_name(int flat0) const {
    const auto& v = flat_.at(flat0);
    return "x" + std::to_string(v.source) + "_" + std::to_string(v.layer);
}

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal) {
    PolarContext ctx = PolarContext::for_ideal(ideal);
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
        VertexSet support;
        for (int v = 1; v <= ideal.arity(); ++v)
            for (int j = 1; j <= g.exponent(v); ++j) support.add(ctx.index(v, j) + 1);
        gens.push_back(Monomial::squarefree(ctx.total(), support));
    }
    return {MonomialIdeal(ctx.total(), std::move(gens)), std::move(ctx)};
}

MonomialIdeal embed_polar_ideal(const MonomialIdeal& ideal, const PolarContext& from, const PolarContext& to) {
    if (ideal.arity() != from.total()) throw ArityMismatchError();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<int> exps(to.total(), 0);
        for (int flat = 0; flat < from.total(); ++flat) {
            if (g.exponent(flat + 1) == 0) continue;
            auto pv = from.variable(flat);
            exps[to.index(pv.source, pv.layer)] = g.exponent(flat + 1);
        }
        gens.push_back(Monomial(std::move(exps)));
    }
    return MonomialIdeal(to.total(), std::move(gens));
}

namespace {

// all layer vectors 1 <= t_j <= m with sum <= m + r - 1, lexicographically
void layer_vectors(int r, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int t : cur) used += t;
    int rest = r - static_cast<int>(cur.size()) - 1;
    for (int t = 1; t <= m; ++t) {
        // remaining positions need at least 1 each
        if (used + t + rest > m + r - 1) break;
        cur.push_back(t);
        layer_vectors(r, m, cur, out);
        cur.pop_back();
    }
}

} // namespace

PolarPrimeComponents polar_prime_power_components(int arity, const VertexSet& face, int m) {
    if (face.empty()) throw EmptyFaceError();
    if (m < 1) throw Error("polar_prime_power_components requires m >= 1");
    std::vector<int> bounds(arity, 0);
    for (int v : face.to_vector()) bounds[v - 1] = m;
    PolarContext ctx(arity, std::move(bounds));
    auto sources = face.to_vector();
    std::vector<std::vector<int>> vectors;
    std::vector<int> cur;
    layer_vectors(static_cast<int>(sources.size()), m, cur, vectors);
    std::vector<VertexSet> components;
    components.reserve(vectors.size());
    for (const auto& tv : vectors) {
        VertexSet comp;
        for (std::size_t k = 0; k < sources.size(); ++k) comp.add(ctx.index(sources[k], tv[k]) + 1);
        components.push_back(comp);
    }
    std::sort(components.begin(), components.end());
    return {std::move(ctx), std::move(components)};
}

PolarizedIdeal symbolic_power_dual_generators(const SimplicialComplex& delta, int m) {
    if (delta.is_full_simplex()) throw FullSimplexError();
    if (!delta.is_pure()) throw Error("symbolic_power_dual_generators requires a pure complex");
    if (m < 1) throw Error("symbolic_power_dual_generators requires m >= 1");

    std::vector<VertexSet> cofacets;   // facets of Delta^c
    VertexSet covered;
    for (const auto& f : delta.facets()) {
        cofacets.push_back(f.complement_in(delta.n()));
        covered = covered | cofacets.back();
    }
    std::vector<int> bounds(delta.n(), 0);
    for (int v : covered.to_vector()) bounds[v - 1] = m;
    PolarContext ctx(delta.n(), std::move(bounds));

    std::vector<Monomial> gens;
    for (const auto& cf : cofacets) {
        auto sources = cf.to_vector();
        std::vector<std::vector<int>> vectors;
        std::vector<int> cur;
        layer_vectors(static_cast<int>(sources.size()), m, cur, vectors);
        for (const auto& tv : vectors) {
            VertexSet support;
            for (std::size_t k = 0; k < sources.size(); ++k) support.add(ctx.index(sources[k], tv[k]) + 1);
            gens.push_back(Monomial::squarefree(ctx.total(), support));
        }
    }
    return {MonomialIdeal(ctx.total(), std::move(gens)), std::move(ctx)};
}

std::vector<int> reverse_lex_order(const MonomialIdeal& ideal, const PolarContext& context) {
    if (ideal.arity() != context.total()) throw ArityMismatchError();
    if (!ideal.is_equigenerated()) throw NotEquigeneratedError();
    const auto& gens = ideal.generators();
    std::vector<int> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto revlex_greater = [&](int a, int b) {
        const auto& ea = gens[a].exponents();
        const auto& eb = gens[b].exponents();
        for (int v = static_cast<int>(ea.size()) - 1; v >= 0; --v) {
            if (ea[v] != eb[v]) return ea[v] < eb[v];
        }
        return false;
    };
    std::sort(order.begin(), order.end(), revlex_greater);
    return order;
}

GammaComplex second_symbolic_polar_complex(const SimplicialComplex& delta) {
    if (delta.is_full_simplex()) throw FullSimplexError();
    if (delta.is_void() || !delta.is_pure() || delta.dimension() != 1) throw NotDimensionOneError();
    const int n = delta.n();
    PolarContext ctx = PolarContext::uniform(n, 2);
    std::vector<VertexSet> facets;
    for (const auto& edge : delta.facets()) {
        VertexSet cf = edge.complement_in(n);   // facet of Delta^c
        auto sources = cf.to_vector();          // ascending r_1 < ... < r_{n-2}
        VertexSet layer1;
        for (int r : sources) layer1.add(ctx.index(r, 1) + 1);
        facets.push_back(layer1.complement_in(ctx.total()));
        for (std::size_t j = 0; j < sources.size(); ++j) {
            VertexSet prime = layer1;
            prime.remove(ctx.index(sources[j], 1) + 1);
            prime.add(ctx.index(sources[j], 2) + 1);
            facets.push_back(prime.complement_in(ctx.total()));
        }
    }
    return {SimplicialComplex(ctx.total(), std::move(facets)), std::move(ctx)};
}

BlockShelling diameter_two_block_shelling(const SimplicialComplex& delta) {
    if (delta.is_void() || !delta.is_pure() || delta.is_full_simplex() || delta.dimension() != 1)
        throw NotDimensionOneError();
    if (delta.n() < 3) throw Error("diameter_two_block_shelling requires n >= 3");
    auto diam = diameter(delta);
    if (!diam || *diam > 2) throw DiameterTooLargeError();

    const int n = delta.n();
    const auto& edges = delta.facets();

    std::vector<bool> used(edges.size(), false);
    std::vector<int> edge_order;
    for (int h = 1; h <= n; ++h) {
        std::vector<int> block;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!used[e] && edges[e].contains(h)) block.push_back(static_cast<int>(e));
        if (block.empty()) continue;
        int first = block.front();
        if (!edge_order.empty()) {
            bool earlier_at_h = false;
            for (int e : edge_order)
                if (edges[e].contains(h)) { earlier_at_h = true; break; }
            if (!earlier_at_h) {
                // bridge via a common neighbor of 1 and h (diameter <= 2)
                first = -1;
                for (int cand : block) {
                    int other = edges[cand].minus(VertexSet::single(h)).min_vertex();
                    VertexSet bridge{1, other};
                    if (other != 1 && delta.contains_face(bridge)) { first = cand; break; }
                }
                if (first < 0) throw Error("block shelling: no bridge edge found");
            }
        }
        edge_order.push_back(first);
        used[first] = true;
        for (int e : block)
            if (!used[e]) {
                edge_order.push_back(e);
                used[e] = true;
            }
    }

    GammaComplex gamma = second_symbolic_polar_complex(delta);
    std::map<std::uint64_t, int> facet_index;
    for (std::size_t i = 0; i < gamma.complex.facets().size(); ++i)
        facet_index[gamma.complex.facets()[i].bits()] = static_cast<int>(i);

    std::vector<int> order;
    for (int e : edge_order) {
        VertexSet cf = edges[e].complement_in(n);
        auto sources = cf.to_vector();
        VertexSet layer1;
        for (int r : sources) layer1.add(gamma.context.index(r, 1) + 1);
        order.push_back(facet_index.at(layer1.complement_in(gamma.context.total()).bits()));
        for (std::size_t j = 0; j < sources.size(); ++j) {
            VertexSet prime = layer1;
            prime.remove(gamma.context.index(sources[j], 1) + 1);
            prime.add(gamma.context.index(sources[j], 2) + 1);
            order.push_back(facet_index.at(prime.complement_in(gamma.context.total()).bits()));
        }
    }

    BlockShelling out{gamma.complex, gamma.context, order, {}, false};
    auto checked = check_shelling(gamma.complex, order);
    if (checked) {
        out.certificate = *checked.certificate;
    } else {
        out.used_fallback = true;
        auto found = find_shelling(gamma.complex);
        if (!found) throw Error("block shelling: complex unexpectedly not shellable");
        out.certificate = *found;
    }
    return out;
}

} // namespace srpowers
