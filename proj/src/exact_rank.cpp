#include "exact_rank.hpp"

namespace srpowers::detail {

long long bareiss_rank(std::vector<std::vector<cpp_int>> a) {
    if (a.empty() || a[0].empty()) return 0;
    const int nr = static_cast<int>(a.size());
    const int nc = static_cast<int>(a[0].size());
    cpp_int prev = 1;
    int rank = 0;
    while (rank < nr && rank < nc) {
        int pr = -1, pc = -1;
        for (int r = rank; r < nr && pr < 0; ++r)
            for (int c = rank; c < nc; ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[rank], a[pr]);
        if (pc != rank)
            for (int r = 0; r < nr; ++r) std::swap(a[r][rank], a[r][pc]);
        for (int r = rank + 1; r < nr; ++r)
            for (int c = rank + 1; c < nc; ++c)
                a[r][c] = (a[rank][rank] * a[r][c] - a[r][rank] * a[rank][c]) / prev;
        for (int r = rank + 1; r < nr; ++r) a[r][rank] = 0;
        prev = a[rank][rank];
        ++rank;
    }
    return rank;
}

long long gf2_rank(const std::vector<std::vector<cpp_int>>& a) {
    if (a.empty() || a[0].empty()) return 0;
    const int nc = static_cast<int>(a[0].size());
    const int words = (nc + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& row : a) {
        std::vector<std::uint64_t> bits(words, 0);
        bool any = false;
        for (int c = 0; c < nc; ++c)
            if (row[c] % 2 != 0) {
                bits[c >> 6] |= std::uint64_t{1} << (c & 63);
                any = true;
            }
        if (any) rows.push_back(std::move(bits));
    }
    std::size_t rank = 0;
    for (int c = 0; c < nc && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot][c >> 6] >> (c & 63)) & 1u)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            if ((rows[r][c >> 6] >> (c & 63)) & 1u)
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

RankPair exact_ranks(int nrows, int ncols, const std::vector<Triplet>& entries) {
    if (nrows == 0 || ncols == 0 || entries.empty()) return {0, 0};
    try {
        UnitElimination<long long> elim(nrows, ncols, entries);
        long long base = elim.run();
        auto rest = elim.leftover();
        return {base + bareiss_rank(rest), base + gf2_rank(rest)};
    } catch (const OverflowSignal&) {
        UnitElimination<cpp_int> elim(nrows, ncols, entries);
        long long base = elim.run();
        auto rest = elim.leftover();
        return {base + bareiss_rank(rest), base + gf2_rank(rest)};
    }
}

} // namespace srpowers::detail
