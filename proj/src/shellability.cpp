#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>
#include <limits>

#include "face_scan.hpp"
#include "srpowers/simplicial_complex.hpp"

namespace srpowers {

namespace {

// Shelling step: every intersection of `cand` with a placed facet must lie
// inside one of size |cand|-1. Pairwise intersections are precomputed.
class ShellingEngine {
public:
    explicit ShellingEngine(const SimplicialComplex& delta) : facets_(delta.facets()) {
        int t = static_cast<int>(facets_.size());
        inter_.assign(t, std::vector<VertexSet>(t));
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) inter_[a][b] = facets_[a] & facets_[b];
    }

    bool step_ok(const std::vector<int>& placed, int cand) const {
        const int target = facets_[cand].size() - 1;
        for (int q : placed) {
            const VertexSet& m = inter_[cand][q];
            if (m.size() == target) continue;
            bool covered = false;
            for (int w : placed)
                if (inter_[cand][w].size() == target && m.subset_of(inter_[cand][w])) { covered = true; break; }
            if (!covered) return false;
        }
        return true;
    }

    std::vector<VertexSet> step_witnesses(const std::vector<int>& placed, int cand) const {
        std::set<VertexSet> maximal;
        for (int q : placed) {
            const VertexSet& m = inter_[cand][q];
            bool dominated = false;
            for (int r : placed)
                if (m != inter_[cand][r] && m.subset_of(inter_[cand][r])) { dominated = true; break; }
            if (!dominated) maximal.insert(m);
        }
        return {maximal.begin(), maximal.end()};
    }

private:
    std::vector<VertexSet> facets_;
    std::vector<std::vector<VertexSet>> inter_;
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

// Memoized DFS over facet orders with weakly decreasing facet size (every
// shellable complex has such a shelling, so the restriction is exact).
// Returns 1 = order found (in `placed`), 0 = exhausted (not shellable),
// -1 = visit cap reached.
class ShellingSearch {
public:
    ShellingSearch(const SimplicialComplex& delta, const ShellingEngine& engine)
        : engine_(engine), t_(static_cast<int>(delta.facets().size())) {
        sizes_.reserve(t_);
        for (const auto& f : delta.facets()) sizes_.push_back(f.size());
    }

    int run(long long cap, std::vector<int>& placed_out) {
        cap_ = cap;
        visits_ = 0;
        capped_ = false;
        placed_.clear();
        int r = dfs() ? 1 : (capped_ ? -1 : 0);
        placed_out = placed_;
        return r;
    }

private:
    bool dfs() {
        if (++visits_ > cap_) {
            capped_ = true;
            return false;
        }
        if (static_cast<int>(placed_.size()) == t_) return true;
        if (dead_.contains(used_)) return false;
        int max_size = -1;
        for (int c = 0; c < t_; ++c)
            if (!used_.test(c)) max_size = std::max(max_size, sizes_[c]);
        for (int c = 0; c < t_; ++c) {
            if (used_.test(c) || sizes_[c] != max_size) continue;
            if (!placed_.empty() && !engine_.step_ok(placed_, c)) continue;
            placed_.push_back(c);
            used_.set(c);
            if (dfs()) return true;
            if (capped_) return false;
            placed_.pop_back();
            used_.clear(c);
        }
        dead_.insert(used_);
        return false;
    }

    const ShellingEngine& engine_;
    int t_;
    std::vector<int> sizes_;
    std::unordered_set<UsedSet, UsedSetHash> dead_;
    std::vector<int> placed_;
    UsedSet used_;
    long long cap_ = 0;
    long long visits_ = 0;
    bool capped_ = false;
};

} // namespace

ShellingCheck check_shelling(const SimplicialComplex& delta, const std::vector<int>& order) {
    const int t = static_cast<int>(delta.facets().size());
    std::vector<bool> seen(t, false);
    if (static_cast<int>(order.size()) != t) throw NotAPermutationError();
    for (int i : order) {
        if (i < 0 || i >= t || seen[i]) throw NotAPermutationError();
        seen[i] = true;
    }
    ShellingEngine engine(delta);
    ShellingCertificate cert;
    cert.order = order;
    std::vector<int> placed;
    for (int p = 0; p < t; ++p) {
        if (p > 0) {
            if (!engine.step_ok(placed, order[p])) return {std::nullopt, p + 1};
            cert.witnesses.push_back(engine.step_witnesses(placed, order[p]));
        }
        placed.push_back(order[p]);
    }
    return {std::move(cert), 0};
}

std::optional<ShellingCertificate> find_shelling(const SimplicialComplex& delta) {
    const int t = static_cast<int>(delta.facets().size());
    if (t > 256) throw Error("find_shelling: too many facets (limit 256)");
    if (t <= 1) {
        ShellingCertificate cert;
        if (t == 1) cert.order = {0};
        return cert;
    }

    ShellingEngine engine(delta);
    ShellingSearch search(delta, engine);
    std::vector<int> placed;

    // capped exhaustion settles small instances and greedy-shellable ones
    constexpr long long kCap = 200000;
    int verdict = search.run(kCap, placed);
    if (verdict == 1) return check_shelling(delta, placed).certificate;
    if (verdict == 0) return std::nullopt;

    // Large instance: refute via homological necessary conditions before the
    // unbounded search. Pure shellable complexes are Cohen-Macaulay over
    // every field; Bjorner-Wachs shellable complexes are sequentially CM.
    std::vector<std::uint64_t> bits;
    bits.reserve(delta.facets().size());
    for (const auto& f : delta.facets()) bits.push_back(f.bits());
    detail::FacetList compact = detail::compact_facets(bits);
    auto filter =
        delta.is_pure() ? detail::cohen_macaulay_scan(compact) : detail::sequentially_cm_scan(compact);
    if (!filter.second) return std::nullopt;

    verdict = search.run(std::numeric_limits<long long>::max(), placed);
    if (verdict == 1) return check_shelling(delta, placed).certificate;
    return std::nullopt;
}

} // namespace srpowers
