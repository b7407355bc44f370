#pragma once

// Exact rank of sparse integer matrices over Q and F2 at once: elimination
// with +-1 pivots is valid over every field, so the bulk of a boundary
// matrix reduces once; the small leftover is finished per field
// (fraction-free Bareiss over Z, dense elimination mod 2).

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srpowers::detail {

using boost::multiprecision::cpp_int;

struct RankPair {
    long long q = 0;
    long long f2 = 0;
};

struct Triplet {
    int row;
    int col;
    int value;
};

struct OverflowSignal {};

constexpr long long kValueCap = (1ll << 46);

template <typename Int>
class UnitElimination {
public:
    UnitElimination(int nrows, int ncols, const std::vector<Triplet>& entries)
        : rows_(nrows), row_alive_(nrows, true), col_rows_(ncols), col_nnz_(ncols, 0) {
        for (const auto& t : entries) {
            rows_[t.row].push_back({t.col, Int(t.value)});
            col_rows_[t.col].push_back(t.row);
            ++col_nnz_[t.col];
        }
        for (auto& r : rows_) std::sort(r.begin(), r.end());
        for (int c = 0; c < ncols; ++c)
            if (col_nnz_[c] > 0) queue_.push({col_nnz_[c], c});
    }

    long long run() {
        long long rank = 0;
        while (true) {
            rank += drain();
            if (!requeue_units()) break;   // units can appear without nnz changes
        }
        return rank;
    }

    std::vector<std::vector<cpp_int>> leftover() const {
        std::vector<int> live_rows, col_map;
        std::vector<int> col_of;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (row_alive_[r] && !rows_[r].empty()) live_rows.push_back(static_cast<int>(r));
        std::vector<int> cols;
        for (int r : live_rows)
            for (const auto& [c, v] : rows_[r]) cols.push_back(c);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::vector<int> pos(cols.empty() ? 0 : cols.back() + 1, -1);
        for (std::size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = static_cast<int>(i);
        std::vector<std::vector<cpp_int>> dense(live_rows.size(), std::vector<cpp_int>(cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows_[live_rows[i]]) dense[i][pos[c]] = cpp_int(v);
        return dense;
    }

private:
    using Row = std::vector<std::pair<int, Int>>;

    static bool is_unit(const Int& v) { return v == 1 || v == -1; }

    long long drain() {
        long long rank = 0;
        while (!queue_.empty()) {
            auto [nnz, c] = queue_.top();
            queue_.pop();
            if (col_nnz_[c] != nnz || nnz == 0) continue;   // stale
            int pivot_row = -1;
            std::size_t best = ~std::size_t{0};
            compact_col(c);
            for (int r : col_rows_[c]) {
                const Int* v = entry(r, c);
                if (v && is_unit(*v) && rows_[r].size() < best) {
                    best = rows_[r].size();
                    pivot_row = r;
                }
            }
            if (pivot_row < 0) continue;   // re-queued whenever the column changes
            eliminate(pivot_row, c);
            ++rank;
        }
        return rank;
    }

    bool requeue_units() {
        bool any = false;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_alive_[r]) continue;
            for (const auto& [c, v] : rows_[r])
                if (is_unit(v)) {
                    compact_col(c);
                    if (col_nnz_[c] > 0) queue_.push({col_nnz_[c], c});
                    any = true;
                }
        }
        return any;
    }

    const Int* entry(int r, int c) const {
        if (!row_alive_[r]) return nullptr;
        auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), c,
                                   [](const std::pair<int, Int>& p, int col) { return p.first < col; });
        if (it == rows_[r].end() || it->first != c) return nullptr;
        return &it->second;
    }

    void compact_col(int c) {
        auto& list = col_rows_[c];
        std::size_t out = 0;
        for (int r : list)
            if (entry(r, c)) list[out++] = r;
        list.resize(out);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        col_nnz_[c] = static_cast<int>(list.size());
    }

    void check(const Int& v) const {
        if constexpr (std::is_same_v<Int, long long>) {
            if (v > kValueCap || v < -kValueCap) throw OverflowSignal{};
        }
    }

    void eliminate(int pivot_row, int c) {
        const Int s = *entry(pivot_row, c);   // +-1
        Row pivot = rows_[pivot_row];
        std::vector<int> targets = col_rows_[c];
        for (int r : targets) {
            if (r == pivot_row) continue;
            const Int* av = entry(r, c);
            if (!av) continue;
            Int factor = *av * s;
            // merged row update: rows_[r] -= factor * pivot
            Row merged;
            merged.reserve(rows_[r].size() + pivot.size());
            auto ia = rows_[r].begin(), ea = rows_[r].end();
            auto ib = pivot.begin(), eb = pivot.end();
            while (ia != ea || ib != eb) {
                if (ib == eb || (ia != ea && ia->first < ib->first)) {
                    merged.push_back(*ia++);
                } else if (ia == ea || ib->first < ia->first) {
                    Int nv = -factor * ib->second;
                    check(nv);
                    note_col_gain(ib->first, r);
                    merged.push_back({ib->first, std::move(nv)});
                    ++ib;
                } else {
                    Int nv = ia->second - factor * ib->second;
                    check(nv);
                    if (nv != 0) merged.push_back({ia->first, std::move(nv)});
                    else note_col_loss(ia->first);
                    ++ia;
                    ++ib;
                }
            }
            rows_[r] = std::move(merged);
        }
        for (const auto& [cc, v] : rows_[pivot_row]) note_col_loss(cc);
        rows_[pivot_row].clear();
        row_alive_[pivot_row] = false;
        compact_col(c);
        if (col_nnz_[c] > 0) queue_.push({col_nnz_[c], c});
    }

    void note_col_gain(int c, int r) {
        col_rows_[c].push_back(r);
        ++col_nnz_[c];
        queue_.push({col_nnz_[c], c});
    }

    void note_col_loss(int c) {
        --col_nnz_[c];
        if (col_nnz_[c] > 0) queue_.push({col_nnz_[c], c});
    }

    std::vector<Row> rows_;
    std::vector<bool> row_alive_;
    std::vector<std::vector<int>> col_rows_;   // may contain stale entries
    std::vector<int> col_nnz_;
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> queue_;
};

long long bareiss_rank(std::vector<std::vector<cpp_int>> a);
long long gf2_rank(const std::vector<std::vector<cpp_int>>& a);
RankPair exact_ranks(int nrows, int ncols, const std::vector<Triplet>& entries);

} // namespace srpowers::detail
