#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "srpowers/errors.hpp"
#include "srpowers/vertex_set.hpp"

namespace srpowers {

/// Monomial in a ring with a fixed number of variables, as an exponent
/// vector. Variables are 1-based; the monomial 1 has all exponents zero.
class Monomial {
public:
    explicit Monomial(int arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(int arity) { return Monomial(arity); }
    static Monomial variable(int arity, int v) {
        Monomial m(arity);
        m.exps_[v - 1] = 1;
        return m;
    }
    static Monomial squarefree(int arity, const VertexSet& support) {
        Monomial m(arity);
        for (int v : support.to_vector()) m.exps_[v - 1] = 1;
        return m;
    }

    int arity() const { return static_cast<int>(exps_.size()); }
    int exponent(int v) const { return exps_[v - 1]; }
    const std::vector<int>& exponents() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const {
        for (int e : exps_)
            if (e > 1) return false;
        return true;
    }

    VertexSet support() const {
        VertexSet s;
        for (int v = 1; v <= arity(); ++v)
            if (exps_[v - 1] > 0) s.add(v);
        return s;
    }

    bool divides(const Monomial& o) const {
        for (int v = 0; v < arity(); ++v)
            if (exps_[v] > o.exps_[v]) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial m(*this);
        for (int v = 0; v < arity(); ++v) m.exps_[v] += o.exps_[v];
        return m;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial m(*this);
        for (int v = 0; v < arity(); ++v) m.exps_[v] = std::max(m.exps_[v], o.exps_[v]);
        return m;
    }

    /// u : v = u / gcd(u, v)
    Monomial colon(const Monomial& o) const {
        Monomial m(*this);
        for (int v = 0; v < arity(); ++v) m.exps_[v] = std::max(0, m.exps_[v] - o.exps_[v]);
        return m;
    }

    Monomial radical() const {
        Monomial m(*this);
        for (int& e : m.exps_)
            if (e > 1) e = 1;
        return m;
    }

    bool operator==(const Monomial&) const = default;

    /// Canonical generator order: higher total degree first, then
    /// lexicographically larger exponent vector first.
    static bool canonical_before(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps_ > b.exps_;
    }

    std::string to_string(const std::function<std::string(int)>& var_name) const {
        if (is_one()) return "1";
        std::string s;
        for (int v = 1; v <= arity(); ++v) {
            if (exps_[v - 1] == 0) continue;
            if (!s.empty()) s += '*';
            s += var_name(v);
            if (exps_[v - 1] > 1) s += '^' + std::to_string(exps_[v - 1]);
        }
        return s;
    }

    std::string to_string() const {
        return to_string([](int v) { return "x" + std::to_string(v); });
    }

private:
    std::vector<int> exps_;
};

} // namespace srpowers
