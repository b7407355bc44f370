#pragma once

#include <optional>
#include <vector>

#include "srpowers/errors.hpp"
#include "srpowers/vertex_set.hpp"

namespace srpowers {

/// Antichain of facets on ambient vertex set {1..n}. The void complex (no
/// facets) and the empty complex <{}> (one empty facet) are distinct values.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes: drops non-maximal and duplicate facets, sorts canonically.
    /// `dropped`, when given, reports whether anything was removed.
    SimplicialComplex(int n, std::vector<VertexSet> facets, bool* dropped = nullptr);

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VertexSet{}}); }
    static SimplicialComplex full_simplex(int n) { return SimplicialComplex(n, {VertexSet::full(n)}); }

    int n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_full_simplex() const { return facets_.size() == 1 && facets_[0] == VertexSet::full(n_); }
    bool is_pure() const;

    /// max |F| - 1 over facets; requires a non-void complex.
    int dimension() const;

    bool contains_face(const VertexSet& f) const;

    /// All faces, including the empty face when the complex is non-void,
    /// sorted by (cardinality, bits). Intended for desk-scale complexes.
    std::vector<VertexSet> faces() const;

    /// Inclusion-minimal subsets of [n] that are not faces.
    std::vector<VertexSet> minimal_nonfaces() const;

    /// Vertices that belong to at least one facet.
    VertexSet support() const;

    auto operator<=>(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// <F_1^c,...,F_t^c> with complements in [n]; an involution.
SimplicialComplex complement_complex(const SimplicialComplex& delta);

/// Faces of the dual are complements of non-faces. Throws FullSimplexError
/// when there is no non-face.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

struct MatroidCounterexample {
    VertexSet from;   // facet F
    VertexSet to;     // facet G
    int removed;      // i in F \ G with no exchange partner
};

struct MatroidResult {
    bool value = false;
    std::optional<MatroidCounterexample> counterexample;
    explicit operator bool() const { return value; }
};

/// Facet exchange property: pure, and for all facets F != G and i in F\G
/// there is j in G\F with (F\{i}) u {j} a face.
MatroidResult is_matroid(const SimplicialComplex& delta);

/// Face augmentation form: for all faces F, G with |F| < |G| there is
/// i in G\F with F u {i} a face. Agrees with is_matroid on every complex.
bool is_matroid_by_augmentation(const SimplicialComplex& delta);

/// Minimal non-faces have pairwise disjoint supports.
bool is_complete_intersection(const SimplicialComplex& delta);

/// Max shortest-path distance over all vertex pairs of [n] in the graph whose
/// edges are the facets; nullopt means infinite. Requires every facet to be
/// an edge (throws NotDimensionOneError).
std::optional<int> diameter(const SimplicialComplex& delta);

struct ShellingCertificate {
    std::vector<int> order;                           // 0-based facet indices
    std::vector<std::vector<VertexSet>> witnesses;    // per step i >= 2, maximal faces of the intersection
};

struct ShellingCheck {
    std::optional<ShellingCertificate> certificate;
    int failure_index = 0;   // first failing i (1-based, >= 2) when no certificate
    explicit operator bool() const { return certificate.has_value(); }
};

/// Bjorner-Wachs condition at every step: the intersection with the earlier
/// subcomplex is pure of dimension dim F_i - 1. Throws NotAPermutationError.
ShellingCheck check_shelling(const SimplicialComplex& delta, const std::vector<int>& order);

/// Exhaustive backtracking over facet orders (candidates in input order),
/// pruned by memoizing dead prefix sets. nullopt is a proof that no shelling
/// exists.
std::optional<ShellingCertificate> find_shelling(const SimplicialComplex& delta);

/// Every pure d-dimensional complex on [n] in which each vertex lies in some
/// facet, in a fixed deterministic order. With dedup_isomorphic, one
/// representative per vertex-relabeling class (the enumeration-first one).
std::vector<SimplicialComplex> enumerate_pure_complexes(int n, int d, bool dedup_isomorphic = false);

/// Lexicographically least facet-bits vector over all vertex relabelings.
std::vector<std::uint64_t> isomorphism_canonical_form(const SimplicialComplex& delta);

/// Inclusion-minimal sets meeting every edge. Edges containing the empty set
/// admit no transversal (empty result); an empty edge list yields {∅}.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);

} // namespace srpowers
