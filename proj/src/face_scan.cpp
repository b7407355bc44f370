#include "face_scan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "exact_rank.hpp"

namespace srpowers::detail {

namespace {

bool cardinality_value_less(std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

std::vector<std::vector<std::uint32_t>> levels_of(const std::vector<std::uint32_t>& faces) {
    std::vector<std::vector<std::uint32_t>> level;
    for (auto f : faces) {
        int c = std::popcount(f);
        if (c >= static_cast<int>(level.size())) level.resize(c + 1);
        level[c].push_back(f);
    }
    return level;
}

// faces of the Alexander dual when it is smaller, else empty
std::vector<std::uint32_t> smaller_dual_faces(const std::vector<std::uint32_t>& faces, int n) {
    if (n < 1 || n > 22) return {};
    std::uint64_t total = std::uint64_t{1} << n;
    if (total - faces.size() >= faces.size()) return {};
    std::vector<bool> is_face(total, false);
    for (auto f : faces) is_face[f] = true;
    std::vector<std::uint32_t> dual;
    dual.reserve(total - faces.size());
    const std::uint32_t full = static_cast<std::uint32_t>(total - 1);
    for (std::uint64_t m = 0; m < total; ++m)
        if (!is_face[m]) dual.push_back(full & ~static_cast<std::uint32_t>(m));
    std::sort(dual.begin(), dual.end(), cardinality_value_less);
    return dual;
}

// GF(2) rank of the boundary map from level c to level c-1, by dense bitset
// elimination on the smaller side.
long long gf2_boundary_rank(const std::vector<std::uint32_t>& lo, const std::vector<std::uint32_t>& hi,
                            const std::map<std::uint32_t, int>& lo_index) {
    if (lo.empty() || hi.empty()) return 0;
    const bool transpose = hi.size() < lo.size();
    const int nrows = static_cast<int>(transpose ? hi.size() : lo.size());
    const int ncols = static_cast<int>(transpose ? lo.size() : hi.size());
    const int words = (ncols + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(nrows) * words, 0);
    for (int j = 0; j < static_cast<int>(hi.size()); ++j) {
        for (std::uint32_t b = hi[j]; b; b &= b - 1) {
            int i = lo_index.at(hi[j] & ~(b & -b));
            int r = transpose ? j : i;
            int c = transpose ? i : j;
            bits[static_cast<std::size_t>(r) * words + (c >> 6)] |= std::uint64_t{1} << (c & 63);
        }
    }
    long long rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int pivot = -1;
        for (int r = static_cast<int>(rank); r < nrows; ++r)
            if ((bits[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int w = 0; w < words; ++w)
            std::swap(bits[static_cast<std::size_t>(rank) * words + w], bits[static_cast<std::size_t>(pivot) * words + w]);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            if ((bits[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u)
                for (int w = 0; w < words; ++w)
                    bits[static_cast<std::size_t>(r) * words + w] ^= bits[static_cast<std::size_t>(rank) * words + w];
        }
        ++rank;
    }
    return rank;
}

std::vector<long long> gf2_profile_of_faces(const std::vector<std::uint32_t>& faces) {
    std::vector<long long> out;
    if (faces.empty()) return out;
    auto level = levels_of(faces);
    const int top_card = static_cast<int>(level.size()) - 1;
    std::vector<std::map<std::uint32_t, int>> index(top_card + 1);
    for (int c = 0; c <= top_card; ++c)
        for (std::size_t i = 0; i < level[c].size(); ++i) index[c][level[c][i]] = static_cast<int>(i);
    std::vector<long long> rank(top_card + 2, 0);
    for (int c = 1; c <= top_card; ++c) rank[c] = gf2_boundary_rank(level[c - 1], level[c], index[c - 1]);
    for (int c = 0; c <= top_card; ++c)
        out.push_back(static_cast<long long>(level[c].size()) - rank[c] - rank[c + 1]);
    return out;
}

// exact both-field level ranks straight from a face list (no dual switching)
LevelRanks level_ranks_direct(const std::vector<std::uint32_t>& faces) {
    LevelRanks out;
    if (faces.empty()) return out;
    auto level = levels_of(faces);
    const int top_card = static_cast<int>(level.size()) - 1;
    std::vector<std::map<std::uint32_t, int>> index(top_card + 1);
    for (int c = 0; c <= top_card; ++c)
        for (std::size_t i = 0; i < level[c].size(); ++i) index[c][level[c][i]] = static_cast<int>(i);

    std::vector<RankPair> ranks(top_card + 2);
    for (int c = 1; c <= top_card; ++c) {
        std::vector<Triplet> entries;
        entries.reserve(level[c].size() * c);
        for (int j = 0; j < static_cast<int>(level[c].size()); ++j) {
            std::uint32_t face = level[c][j];
            int sign = 1;
            for (std::uint32_t b = face; b; b &= b - 1) {
                std::uint32_t sub = face & ~(b & -b);
                entries.push_back({index[c - 1].at(sub), j, sign});
                sign = -sign;
            }
        }
        ranks[c] = exact_ranks(static_cast<int>(level[c - 1].size()), static_cast<int>(level[c].size()), entries);
    }
    for (int c = 0; c <= top_card; ++c) {
        long long sz = static_cast<long long>(level[c].size());
        out.q.push_back(sz - ranks[c].q - ranks[c + 1].q);
        out.f2.push_back(sz - ranks[c].f2 - ranks[c + 1].f2);
    }
    return out;
}

int top_cardinality(const std::vector<std::uint32_t>& facets) {
    int top = 0;
    for (auto f : facets) top = std::max(top, std::popcount(f));
    return top;
}

bool is_cone(const std::vector<std::uint32_t>& facets) {
    std::uint32_t common = ~std::uint32_t{0};
    for (auto f : facets) common &= f;
    return common != 0;
}

} // namespace

std::vector<std::uint32_t> faces_of(const FacetList& complex) {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> stack;
    for (auto f : complex.facets)
        if (seen.insert(f).second) stack.push_back(f);
    while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        for (std::uint32_t b = cur; b; b &= b - 1) {
            std::uint32_t sub = cur & ~(b & -b);
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    std::vector<std::uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), cardinality_value_less);
    return out;
}

FacetList compact_facets(const std::vector<std::uint64_t>& facet_bits) {
    std::uint64_t used = 0;
    for (auto f : facet_bits) used |= f;
    std::vector<int> map(64, -1);
    int n = 0;
    for (int v = 0; v < 64; ++v)
        if ((used >> v) & 1u) map[v] = n++;
    if (n > 30) throw std::runtime_error("complex too large for homology scan (more than 30 used vertices)");
    FacetList out;
    out.n = n;
    for (auto f : facet_bits) {
        std::uint32_t m = 0;
        for (std::uint64_t b = f; b; b &= b - 1) m |= std::uint32_t{1} << map[std::countr_zero(b)];
        out.facets.push_back(m);
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

LevelRanks homology_of_facets(const FacetList& complex) {
    if (complex.facets.empty()) return {};
    const int top_card = top_cardinality(complex.facets);
    if (is_cone(complex.facets)) {
        LevelRanks out;
        out.q.assign(top_card + 1, 0);
        out.f2.assign(top_card + 1, 0);
        return out;
    }
    auto faces = faces_of(complex);
    auto dual = smaller_dual_faces(faces, complex.n);
    if (!dual.empty()) {
        // Alexander duality: rank H~_i(complex) = rank H~_{n-3-i}(dual)
        LevelRanks d = level_ranks_direct(dual);
        LevelRanks out;
        for (int dim = -1; dim <= top_card - 1; ++dim) {
            out.q.push_back(d.rank_q(complex.n - 3 - dim));
            out.f2.push_back(d.rank_f2(complex.n - 3 - dim));
        }
        return out;
    }
    return level_ranks_direct(faces);
}

std::pair<bool, bool> vanishing_below_top(const FacetList& complex) {
    if (complex.facets.empty()) return {true, true};
    const int top_card = top_cardinality(complex.facets);

    if (top_card <= 1) return {true, true};   // dims -1 and 0 have nothing below top

    if (top_card == 2) {
        // graph: below-top vanishing means connected (counting isolated vertices)
        std::uint32_t verts = 0;
        for (auto f : complex.facets) verts |= f;
        std::uint32_t seen = std::uint32_t{1} << std::countr_zero(verts);
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto f : complex.facets)
                if ((f & seen) && (f & ~seen)) {
                    seen |= f;
                    grew = true;
                }
        }
        bool connected = seen == verts;
        return {connected, connected};
    }

    if (is_cone(complex.facets)) return {true, true};

    // GF(2) first: mod-2 vanishing certifies rational vanishing level by
    // level (n_c = r_c + r_{c+1} over F2 forces the same over Q).
    auto faces = faces_of(complex);
    auto dual = smaller_dual_faces(faces, complex.n);
    std::vector<long long> f2 = gf2_profile_of_faces(dual.empty() ? faces : dual);
    auto f2_rank_at = [&](int dim) {
        int i = dual.empty() ? dim + 1 : complex.n - 3 - dim + 1;
        return (i < 0 || i >= static_cast<int>(f2.size())) ? 0ll : f2[i];
    };
    bool vanish_f2 = true;
    for (int dim = -1; dim <= top_card - 2; ++dim)
        if (f2_rank_at(dim) != 0) {
            vanish_f2 = false;
            break;
        }
    if (vanish_f2) return {true, true};

    LevelRanks exact = level_ranks_direct(dual.empty() ? faces : dual);
    auto q_rank_at = [&](int dim) {
        return dual.empty() ? exact.rank_q(dim) : exact.rank_q(complex.n - 3 - dim);
    };
    bool vanish_q = true;
    for (int dim = -1; dim <= top_card - 2; ++dim)
        if (q_rank_at(dim) != 0) {
            vanish_q = false;
            break;
        }
    return {vanish_q, false};
}

std::pair<bool, bool> cohen_macaulay_scan(const FacetList& complex) {
    std::pair<bool, bool> out{true, true};
    if (complex.facets.empty()) return out;
    auto faces = faces_of(complex);

    // distinct non-cone links, cheapest first so failures surface early
    std::map<std::vector<std::uint32_t>, long long> links;
    for (auto sigma : faces) {
        std::vector<std::uint32_t> link;
        std::uint32_t common = ~std::uint32_t{0};
        for (auto f : complex.facets)
            if ((sigma & ~f) == 0) {
                link.push_back(f & ~sigma);
                common &= link.back();
            }
        if (common != 0) continue;
        std::sort(link.begin(), link.end());
        if (links.contains(link)) continue;
        long long cost = 0;
        for (auto f : link) cost += std::int64_t{1} << std::min(std::popcount(f), 24);
        links.emplace(std::move(link), cost);
    }
    std::vector<const std::vector<std::uint32_t>*> order;
    order.reserve(links.size());
    for (const auto& [link, cost] : links) order.push_back(&link);
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto* a, const auto* b) { return links.at(*a) < links.at(*b); });

    for (const auto* link : order) {
        auto vanish = vanishing_below_top({complex.n, *link});
        out.first = out.first && vanish.first;
        out.second = out.second && vanish.second;
        if (!out.first && !out.second) return out;
    }
    return out;
}

std::pair<bool, bool> sequentially_cm_scan(const FacetList& complex) {
    std::pair<bool, bool> out{true, true};
    if (complex.facets.empty()) return out;
    auto faces = faces_of(complex);
    int top_card = std::popcount(faces.back());
    for (int c = top_card; c >= 1; --c) {
        std::vector<std::uint32_t> skeleton;
        for (auto f : faces)
            if (std::popcount(f) == c) skeleton.push_back(f);
        auto cm = cohen_macaulay_scan({complex.n, skeleton});
        out.first = out.first && cm.first;
        out.second = out.second && cm.second;
        if (!out.first && !out.second) return out;
    }
    return out;
}

} // namespace srpowers::detail
