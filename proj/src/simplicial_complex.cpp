#include "srpowers/simplicial_complex.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace srpowers {

namespace {

std::vector<VertexSet> maximal_antichain(std::vector<VertexSet> sets, bool* dropped) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& t : sets) {
            if (t != s && s.subset_of(t)) { dominated = true; break; }
        }
        if (!dominated) out.push_back(s);
    }
    if (dropped) *dropped = out.size() != sets.size();
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets, bool* dropped) : n_(n) {
    bool removed_dup = false;
    std::size_t raw = facets.size();
    for (const auto& f : facets) {
        if (!f.subset_of(VertexSet::full(n))) {
            for (int v : f.to_vector())
                if (v > n) throw VertexOutOfRangeError(v, n);
        }
    }
    facets_ = maximal_antichain(std::move(facets), &removed_dup);
    if (dropped) *dropped = removed_dup || facets_.size() != raw;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw Error("void complex has no dimension");
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::contains_face(const VertexSet& f) const {
    for (const auto& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (const auto& f : facets_) {
        if (seen.insert(f.bits()).second) stack.push_back(f.bits());
    }
    while (!stack.empty()) {
        std::uint64_t cur = stack.back();
        stack.pop_back();
        for (std::uint64_t b = cur; b; b &= b - 1) {
            std::uint64_t sub = cur & ~(b & -b);
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (auto b : seen) out.push_back(VertexSet(b));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return std::make_pair(a.size(), a.bits()) < std::make_pair(b.size(), b.bits());
    });
    return out;
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (const auto& f : facets_) s = s | f;
    return s;
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
    // Berge's sequential algorithm: fold edges into the running antichain.
    std::vector<VertexSet> cur{VertexSet{}};
    for (const auto& e : edges) {
        if (e.empty()) return {};
        std::vector<VertexSet> next;
        for (const auto& t : cur) {
            if (t.intersects(e)) {
                next.push_back(t);
            } else {
                for (int v : e.to_vector()) {
                    VertexSet t2 = t;
                    t2.add(v);
                    next.push_back(t2);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<VertexSet> minimal;
        for (const auto& s : next) {
            bool has_smaller = false;
            for (const auto& t : next)
                if (t != s && t.subset_of(s)) { has_smaller = true; break; }
            if (!has_smaller) minimal.push_back(s);
        }
        cur = std::move(minimal);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
    std::vector<VertexSet> complements;
    complements.reserve(facets_.size());
    for (const auto& f : facets_) complements.push_back(f.complement_in(n_));
    return minimal_transversals(complements);
}

SimplicialComplex complement_complex(const SimplicialComplex& delta) {
    std::vector<VertexSet> out;
    out.reserve(delta.facets().size());
    for (const auto& f : delta.facets()) out.push_back(f.complement_in(delta.n()));
    return SimplicialComplex(delta.n(), std::move(out));
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    if (delta.is_full_simplex()) throw FullSimplexError();
    std::vector<VertexSet> out;
    for (const auto& nf : delta.minimal_nonfaces()) out.push_back(nf.complement_in(delta.n()));
    return SimplicialComplex(delta.n(), std::move(out));
}

MatroidResult is_matroid(const SimplicialComplex& delta) {
    if (!delta.is_pure()) return {false, std::nullopt};
    const auto& fs = delta.facets();
    for (const auto& f : fs) {
        for (const auto& g : fs) {
            if (f == g) continue;
            for (int i : f.minus(g).to_vector()) {
                VertexSet base = f;
                base.remove(i);
                bool found = false;
                for (int j : g.minus(f).to_vector()) {
                    VertexSet swapped = base;
                    swapped.add(j);
                    if (delta.contains_face(swapped)) { found = true; break; }
                }
                if (!found) return {false, MatroidCounterexample{f, g, i}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_matroid_by_augmentation(const SimplicialComplex& delta) {
    auto all = delta.faces();
    for (const auto& f : all) {
        for (const auto& g : all) {
            if (f.size() >= g.size()) continue;
            bool found = false;
            for (int i : g.minus(f).to_vector()) {
                VertexSet bigger = f;
                bigger.add(i);
                if (delta.contains_face(bigger)) { found = true; break; }
            }
            if (!found) return false;
        }
    }
    return true;
}

bool is_complete_intersection(const SimplicialComplex& delta) {
    auto nonfaces = delta.minimal_nonfaces();
    for (std::size_t a = 0; a < nonfaces.size(); ++a)
        for (std::size_t b = a + 1; b < nonfaces.size(); ++b)
            if (nonfaces[a].intersects(nonfaces[b])) return false;
    return true;
}

std::optional<int> diameter(const SimplicialComplex& delta) {
    for (const auto& f : delta.facets())
        if (f.size() != 2) throw NotDimensionOneError();
    int n = delta.n();
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& f : delta.facets()) {
        auto vs = f.to_vector();
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    int best = 0;
    std::vector<int> dist(n + 1);
    for (int src = 1; src <= n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 1; v <= n; ++v) {
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

std::vector<SimplicialComplex> enumerate_pure_complexes(int n, int d, bool dedup_isomorphic) {
    if (d < 0 || d >= n) throw Error("enumerate_pure_complexes requires 0 <= d < n");
    std::vector<VertexSet> candidates;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(mask);
        if (s.size() == d + 1) candidates.push_back(s);
    }
    std::sort(candidates.begin(), candidates.end());
    const int k = static_cast<int>(candidates.size());
    std::vector<SimplicialComplex> out;
    std::set<std::vector<std::uint64_t>> seen_forms;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
        VertexSet covered;
        std::vector<VertexSet> facets;
        for (int i = 0; i < k; ++i)
            if ((pick >> i) & 1u) {
                facets.push_back(candidates[i]);
                covered = covered | candidates[i];
            }
        if (covered != VertexSet::full(n)) continue;
        SimplicialComplex delta(n, std::move(facets));
        if (dedup_isomorphic && !seen_forms.insert(isomorphism_canonical_form(delta)).second) continue;
        out.push_back(std::move(delta));
    }
    return out;
}

std::vector<std::uint64_t> isomorphism_canonical_form(const SimplicialComplex& delta) {
    const int n = delta.n();
    if (n > 8) throw Error("isomorphism_canonical_form supports n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    bool first = true;
    do {
        std::vector<std::uint64_t> img;
        img.reserve(delta.facets().size());
        for (const auto& f : delta.facets()) {
            std::uint64_t m = 0;
            for (int v : f.to_vector()) m |= std::uint64_t{1} << perm[v - 1];
            img.push_back(m);
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace srpowers
