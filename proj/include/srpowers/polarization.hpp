#pragma once

#include <string>
#include <vector>

#include "srpowers/monomial_ideal.hpp"

namespace srpowers {

struct PolarVariable {
    int source;   // 1-based source variable
    int layer;    // 1-based layer, layer <= bound of the source
    bool operator==(const PolarVariable&) const = default;
};

/// Ring of doubly indexed variables x_{i,j}, j <= a_i, flattened layer-major:
/// all layer-1 variables by source, then layer-2, and so on. Flat index order
/// realizes the ordering x_{i,a} > x_{j,b} iff a < b, or a = b and i < j
/// (smaller flat index = larger variable).
class PolarContext {
public:
    PolarContext(int source_arity, std::vector<int> bounds);

    static PolarContext uniform(int source_arity, int layers);
    static PolarContext for_ideal(const MonomialIdeal& ideal);   // bounds = max exponents

    int source_arity() const { return n_; }
    const std::vector<int>& bounds() const { return bounds_; }
    int total() const { return static_cast<int>(flat_.size()); }

    bool admissible(int source, int layer) const;
    int index(int source, int layer) const;          // 0-based flat index
    PolarVariable variable(int flat0) const { return flat_.at(flat0); }
    std::string variable_name(int flat0) const;      // "x3_2"

    bool operator==(const PolarContext&) const = default;

private:
    int n_ = 0;
    std::vector<int> bounds_;
    std::vector<PolarVariable> flat_;
    std::vector<std::vector<int>> idx_;   // idx_[source-1][layer-1]
};

struct PolarizedIdeal {
    MonomialIdeal ideal;     // squarefree, arity = context.total()
    PolarContext context;
};

/// u = prod x_i^{a_i} maps to prod_i prod_{j<=a_i} x_{i,j}.
PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal);

/// Re-index a polar ideal into a context with larger bounds.
MonomialIdeal embed_polar_ideal(const MonomialIdeal& ideal, const PolarContext& from, const PolarContext& to);

struct PolarPrimeComponents {
    PolarContext context;                 // bounds m on F, 0 elsewhere
    std::vector<VertexSet> components;    // flat-index variable sets
};

/// Irreducible components of (P_F^m)^p: one prime (x_{s_1,t_1},...,x_{s_r,t_r})
/// for every layer vector 1 <= t_j <= m with sum t_j <= m + r - 1.
PolarPrimeComponents polar_prime_power_components(int arity, const VertexSet& face, int m);

/// The dual of the polarized m-th symbolic power, built directly from its
/// generator description: x_{i_1,a_1}...x_{i_r,a_r} over facets {i_1..i_r} of
/// Delta^c with 1 <= a_j <= m and sum a_j <= m + r - 1. Requires Delta pure
/// and not the full simplex.
PolarizedIdeal symbolic_power_dual_generators(const SimplicialComplex& delta, int m);

/// Generator indices sorted so that earlier monomials are reverse-lex larger
/// with respect to the context's variable order. Throws NotEquigeneratedError.
std::vector<int> reverse_lex_order(const MonomialIdeal& ideal, const PolarContext& context);

struct GammaComplex {
    SimplicialComplex complex;   // on the 2n layer-major polar vertices
    PolarContext context;        // uniform bounds 2
};

/// The complex whose Stanley-Reisner ideal is the polarized second symbolic
/// power of a pure 1-dimensional complex: facets (F,1)^c and (F,2_j)^c over
/// the facets F of Delta^c.
GammaComplex second_symbolic_polar_complex(const SimplicialComplex& delta);

struct BlockShelling {
    SimplicialComplex gamma;
    PolarContext context;
    std::vector<int> constructed_order;   // indices into gamma.facets()
    ShellingCertificate certificate;
    bool used_fallback = false;           // true if the construction failed and search was used
};

/// Shelling order for the second-symbolic-power complex of a diameter <= 2
/// graph, built block by block over the vertices; validated by
/// check_shelling. Requires pure dim 1, n >= 3, diameter <= 2.
BlockShelling diameter_two_block_shelling(const SimplicialComplex& delta);

} // namespace srpowers
