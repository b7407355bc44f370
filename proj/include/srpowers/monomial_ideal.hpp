#pragma once

#include <optional>
#include <vector>

#include "srpowers/monomial.hpp"
#include "srpowers/simplicial_complex.hpp"

namespace srpowers {

/// Monomial ideal given by its unique minimal generating set, kept in
/// canonical order so equal ideals compare equal as values. The zero ideal
/// has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int arity) : arity_(arity) {}

    /// Minimalizes: drops generators divisible by another, sorts canonically.
    /// `dropped` reports whether anything was removed.
    MonomialIdeal(int arity, std::vector<Monomial> generators, bool* dropped = nullptr);

    static MonomialIdeal zero(int arity) { return MonomialIdeal(arity); }
    static MonomialIdeal unit(int arity) { return MonomialIdeal(arity, {Monomial::one(arity)}); }

    int arity() const { return arity_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_squarefree() const;
    bool is_equigenerated() const;

    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal&) const = default;

    std::string to_string() const;   // "(x1^2*x3, x2)", "(0)", "(1)"
    std::string to_string(const std::function<std::string(int)>& var_name) const;

private:
    int arity_ = 0;
    std::vector<Monomial> gens_;
};

/// Normalization of an arbitrary generator list to G(I).
MonomialIdeal minimalize(int arity, std::vector<Monomial> generators, bool* dropped = nullptr);

/// Pairwise-lcm intersection. Throws ArityMismatchError.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ordinary power: all products of m generators with repetition, minimalized.
MonomialIdeal power(const MonomialIdeal& ideal, int m);

MonomialIdeal radical(const MonomialIdeal& ideal);

/// Exact equality of minimal generating sets; throws ArityMismatchError.
bool ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// P_F = (x_i : i in F).
MonomialIdeal vertex_prime(int arity, const VertexSet& face);

/// All monomials of degree m in the variables of F, i.e. G(P_F^m).
MonomialIdeal vertex_prime_power(int arity, const VertexSet& face, int m);

/// Squarefree monomials of the minimal non-faces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta);

/// Products over facets.
MonomialIdeal facet_ideal(const SimplicialComplex& delta);

/// Inverse of stanley_reisner_ideal. Throws NotSquarefreeError or
/// ContainsVariableError (generator of degree <= 1).
SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal);

/// Alexander dual of a squarefree ideal: generators are the minimal
/// transversals of the generator supports (the facet ideal of Delta^c).
/// Throws NotSquarefreeError / ZeroOrUnitError.
MonomialIdeal squarefree_dual(const MonomialIdeal& ideal);

/// Intersection of the m-th powers of the facet primes of Delta^c.
/// Throws FullSimplexError.
MonomialIdeal symbolic_power(const SimplicialComplex& delta, int m);

/// All minimal primes of the same height (radical taken first).
bool is_unmixed(const MonomialIdeal& ideal);

/// Generator supports are the facets of a matroid. Throws NotSquarefreeError.
bool is_matroidal(const MonomialIdeal& ideal);

struct LinearQuotientWitness {
    int earlier;    // position k < i in the order (0-based)
    int variable;   // t with u_k : u_i = x_t and x_t | (u_j : u_i)
};

struct LinearQuotientCertificate {
    std::vector<int> order;   // 0-based generator indices
    // witnesses[i-1][j]: witness for step i (0-based position >= 1) against
    // the j-th earlier generator.
    std::vector<std::vector<LinearQuotientWitness>> witnesses;
};

struct LinearQuotientCheck {
    std::optional<LinearQuotientCertificate> certificate;
    int failure_index = 0;   // first failing i (1-based, >= 2)
    explicit operator bool() const { return certificate.has_value(); }
};

/// Colon ideal (u_1..u_{i-1}) : u_i generated by variables at every step.
/// Throws NotAPermutationError.
LinearQuotientCheck check_linear_quotients(const MonomialIdeal& ideal, const std::vector<int>& order);

/// Backtracking over admissible next generators, candidates in canonical
/// order, dead prefix sets memoized. nullopt proves no order exists.
std::optional<LinearQuotientCertificate> find_linear_quotients_order(const MonomialIdeal& ideal);

} // namespace srpowers
