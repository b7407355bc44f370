#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace srpowers {

/// Subset of {1..n} for n <= 64, stored as a bitmask (vertex v <-> bit v-1).
class VertexSet {
public:
    static constexpr int max_vertices = 64;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) add(v);
    }

    static VertexSet full(int n) {
        return n == 0 ? VertexSet() : VertexSet(~std::uint64_t{0} >> (max_vertices - n));
    }
    static VertexSet single(int v) { return VertexSet({v}); }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    void add(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

    VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet minus(const VertexSet& o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet complement_in(int n) const { return VertexSet(full(n).bits_ & ~bits_); }

    int min_vertex() const { return std::countr_zero(bits_) + 1; }   // requires nonempty

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ' ';
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    auto operator<=>(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

} // namespace srpowers
