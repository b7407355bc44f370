#include "srpowers/monomial_ideal.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace srpowers {

MonomialIdeal::MonomialIdeal(int arity, std::vector<Monomial> generators, bool* dropped) : arity_(arity) {
    for (const auto& g : generators)
        if (g.arity() != arity) throw ArityMismatchError();
    std::size_t raw = generators.size();
    std::sort(generators.begin(), generators.end(), Monomial::canonical_before);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators) {
            if (&h == &g) continue;
            if (h != g && h.divides(g)) { redundant = true; break; }
        }
        if (!redundant) gens_.push_back(g);
    }
    if (dropped) *dropped = gens_.size() != raw;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::is_equigenerated() const {
    for (const auto& g : gens_)
        if (g.degree() != gens_.front().degree()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    if (other.arity_ != arity_) throw ArityMismatchError();
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string MonomialIdeal::to_string(const std::function<std::string(int)>& var_name) const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string(var_name);
    }
    return s + ")";
}

std::string MonomialIdeal::to_string() const {
    return to_string([](int v) { return "x" + std::to_string(v); });
}

MonomialIdeal minimalize(int arity, std::vector<Monomial> generators, bool* dropped) {
    return MonomialIdeal(arity, std::move(generators), dropped);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw ArityMismatchError();
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(u.lcm(v));
    return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int m) {
    if (m < 1) throw Error("power requires m >= 1");
    if (ideal.is_zero()) return ideal;
    const auto& g = ideal.generators();
    std::vector<Monomial> products;
    std::vector<int> choice;
    auto rec = [&](auto&& self, int from, int left, const Monomial& acc) -> void {
        if (left == 0) {
            products.push_back(acc);
            return;
        }
        for (std::size_t i = from; i < g.size(); ++i) self(self, static_cast<int>(i), left - 1, acc.times(g[i]));
    };
    rec(rec, 0, m, Monomial::one(ideal.arity()));
    return MonomialIdeal(ideal.arity(), std::move(products));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.radical());
    return MonomialIdeal(ideal.arity(), std::move(gens));
}

bool ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw ArityMismatchError();
    return a == b;
}

MonomialIdeal vertex_prime(int arity, const VertexSet& face) {
    std::vector<Monomial> gens;
    for (int v : face.to_vector()) gens.push_back(Monomial::variable(arity, v));
    return MonomialIdeal(arity, std::move(gens));
}

MonomialIdeal vertex_prime_power(int arity, const VertexSet& face, int m) {
    if (m < 1) throw Error("vertex_prime_power requires m >= 1");
    std::vector<Monomial> gens;
    auto vars = face.to_vector();
    std::vector<int> exps(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == vars.size()) {
            exps[pos] = left;
            Monomial mon(arity);
            std::vector<int> e(arity, 0);
            for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i] - 1] = exps[i];
            gens.push_back(Monomial(std::move(e)));
            return;
        }
        for (int take = 0; take <= left; ++take) {
            exps[pos] = take;
            self(self, pos + 1, left - take);
        }
    };
    if (vars.empty()) return MonomialIdeal::zero(arity);
    rec(rec, 0, m);
    return MonomialIdeal(arity, std::move(gens));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta) {
    std::vector<Monomial> gens;
    for (const auto& nf : delta.minimal_nonfaces())
        gens.push_back(Monomial::squarefree(delta.n(), nf));
    return MonomialIdeal(delta.n(), std::move(gens));
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
    std::vector<Monomial> gens;
    for (const auto& f : delta.facets()) gens.push_back(Monomial::squarefree(delta.n(), f));
    return MonomialIdeal(delta.n(), std::move(gens));
}

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw NotSquarefreeError();
    for (const auto& g : ideal.generators())
        if (g.degree() <= 1) throw ContainsVariableError();
    std::vector<VertexSet> supports;
    supports.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) supports.push_back(g.support());
    std::vector<VertexSet> facets;
    for (const auto& t : minimal_transversals(supports))
        facets.push_back(t.complement_in(ideal.arity()));
    return SimplicialComplex(ideal.arity(), std::move(facets));
}

MonomialIdeal squarefree_dual(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw NotSquarefreeError();
    if (ideal.is_zero() || ideal.is_unit()) throw ZeroOrUnitError();
    std::vector<VertexSet> supports;
    supports.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) supports.push_back(g.support());
    std::vector<Monomial> gens;
    for (const auto& t : minimal_transversals(supports))
        gens.push_back(Monomial::squarefree(ideal.arity(), t));
    return MonomialIdeal(ideal.arity(), std::move(gens));
}

MonomialIdeal symbolic_power(const SimplicialComplex& delta, int m) {
    if (delta.is_full_simplex()) throw FullSimplexError();
    if (m < 1) throw Error("symbolic_power requires m >= 1");
    MonomialIdeal result = MonomialIdeal::unit(delta.n());
    for (const auto& f : delta.facets()) {
        // facets of Delta^c are the complements of the facets of Delta
        result = intersect(result, vertex_prime_power(delta.n(), f.complement_in(delta.n()), m));
    }
    return result;
}

bool is_unmixed(const MonomialIdeal& ideal) {
    MonomialIdeal rad = radical(ideal);
    std::vector<VertexSet> supports;
    for (const auto& g : rad.generators()) supports.push_back(g.support());
    auto primes = minimal_transversals(supports);
    for (const auto& p : primes)
        if (p.size() != primes.front().size()) return false;
    return true;
}

bool is_matroidal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw NotSquarefreeError();
    std::vector<VertexSet> facets;
    for (const auto& g : ideal.generators()) facets.push_back(g.support());
    return is_matroid(SimplicialComplex(ideal.arity(), std::move(facets))).value;
}

namespace {

// Linear-quotient step data: colon quotients of all generator pairs, with
// degree-1 quotients flagged by their variable.
class QuotientTable {
public:
    explicit QuotientTable(const MonomialIdeal& ideal) : gens_(ideal.generators()) {
        const int t = static_cast<int>(gens_.size());
        var1_.assign(t, std::vector<int>(t, 0));
        support_.assign(t, std::vector<VertexSet>(t));
        for (int k = 0; k < t; ++k)
            for (int i = 0; i < t; ++i) {
                if (k == i) continue;
                Monomial q = gens_[k].colon(gens_[i]);
                support_[k][i] = q.support();
                if (q.degree() == 1) var1_[k][i] = q.support().min_vertex();
            }
    }

    int count() const { return static_cast<int>(gens_.size()); }

    // Witness for generator pair (j earlier, cand): some k in `placed` with
    // u_k : u_cand = x_t and x_t | (u_j : u_cand).
    std::optional<LinearQuotientWitness> witness(const std::vector<int>& placed, int j, int cand) const {
        for (std::size_t kp = 0; kp < placed.size(); ++kp) {
            int k = placed[kp];
            int t = var1_[k][cand];
            if (t != 0 && support_[j][cand].contains(t))
                return LinearQuotientWitness{static_cast<int>(kp), t};
        }
        return std::nullopt;
    }

    bool step_ok(const std::vector<int>& placed, int cand) const {
        VertexSet avail;
        for (int k : placed)
            if (var1_[k][cand] != 0) avail.add(var1_[k][cand]);
        for (int j : placed)
            if (!avail.intersects(support_[j][cand])) return false;
        return true;
    }

private:
    std::vector<Monomial> gens_;
    std::vector<std::vector<int>> var1_;
    std::vector<std::vector<VertexSet>> support_;
};

struct UsedSet {
    std::array<std::uint64_t, 4> w{};
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool operator==(const UsedSet&) const = default;
};

struct UsedSetHash {
    std::size_t operator()(const UsedSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : s.w) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

} // namespace

LinearQuotientCheck check_linear_quotients(const MonomialIdeal& ideal, const std::vector<int>& order) {
    const int t = static_cast<int>(ideal.generators().size());
    if (static_cast<int>(order.size()) != t) throw NotAPermutationError();
    std::vector<bool> seen(t, false);
    for (int i : order) {
        if (i < 0 || i >= t || seen[i]) throw NotAPermutationError();
        seen[i] = true;
    }
    QuotientTable table(ideal);
    LinearQuotientCertificate cert;
    cert.order = order;
    std::vector<int> placed;
    for (int p = 0; p < t; ++p) {
        if (p > 0) {
            std::vector<LinearQuotientWitness> row;
            for (std::size_t jp = 0; jp < placed.size(); ++jp) {
                auto w = table.witness(placed, placed[jp], order[p]);
                if (!w) return {std::nullopt, p + 1};
                row.push_back(*w);
            }
            cert.witnesses.push_back(std::move(row));
        }
        placed.push_back(order[p]);
    }
    return {std::move(cert), 0};
}

std::optional<LinearQuotientCertificate> find_linear_quotients_order(const MonomialIdeal& ideal) {
    const int t = static_cast<int>(ideal.generators().size());
    if (t > 256) throw Error("find_linear_quotients_order: too many generators (limit 256)");
    if (t <= 1) {
        LinearQuotientCertificate cert;
        if (t == 1) cert.order = {0};
        return cert;
    }
    QuotientTable table(ideal);
    std::unordered_set<UsedSet, UsedSetHash> dead;
    std::vector<int> placed;
    UsedSet used;

    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(placed.size()) == t) return true;
        if (dead.contains(used)) return false;
        for (int c = 0; c < t; ++c) {
            if (used.test(c)) continue;
            if (!placed.empty() && !table.step_ok(placed, c)) continue;
            placed.push_back(c);
            used.set(c);
            if (self(self)) return true;
            placed.pop_back();
            used.clear(c);
        }
        dead.insert(used);
        return false;
    };

    if (!dfs(dfs)) return std::nullopt;
    auto checked = check_linear_quotients(ideal, placed);
    return checked.certificate;
}

} // namespace srpowers
