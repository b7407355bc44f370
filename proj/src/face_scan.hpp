#pragma once

// Internal machinery: compacted complexes as uint32 face masks, exact
// homology level ranks with Alexander-dual switching, and the link-vanishing
// scans behind the Cohen-Macaulay and sequentially-CM checks.

#include <cstdint>
#include <utility>
#include <vector>

namespace srpowers::detail {

struct FacetList {
    int n = 0;                            // vertex universe 0..n-1
    std::vector<std::uint32_t> facets;    // antichain of masks (may be {0} for <{}>)
};

// All faces generated by the facets, sorted by (cardinality, value);
// includes the empty face when facets is nonempty.
std::vector<std::uint32_t> faces_of(const FacetList& complex);

struct LevelRanks {
    // index i corresponds to dimension i-1; empty for the void complex
    std::vector<long long> q;
    std::vector<long long> f2;
    long long rank_q(int dim) const {
        int i = dim + 1;
        return (i < 0 || i >= static_cast<int>(q.size())) ? 0 : q[i];
    }
    long long rank_f2(int dim) const {
        int i = dim + 1;
        return (i < 0 || i >= static_cast<int>(f2.size())) ? 0 : f2[i];
    }
};

// Exact reduced homology ranks over Q and F2.
LevelRanks homology_of_facets(const FacetList& complex);

// (vanishes over Q, vanishes over F2) for reduced homology below the top
// dimension of the complex; analytic fast paths for dim <= 1.
std::pair<bool, bool> vanishing_below_top(const FacetList& complex);

// Reisner scan: every link (including the whole complex) vanishes below its
// top dimension. Early exit once both fields have failed.
std::pair<bool, bool> cohen_macaulay_scan(const FacetList& complex);

// Duval: sequentially CM iff every pure i-skeleton is CM; scanned from the
// top dimension down with early exit.
std::pair<bool, bool> sequentially_cm_scan(const FacetList& complex);

// Compact 1-based VertexSet facet bits to the used-vertex universe.
FacetList compact_facets(const std::vector<std::uint64_t>& facet_bits);

} // namespace srpowers::detail
