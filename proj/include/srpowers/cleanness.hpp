#pragma once

#include <optional>

#include "srpowers/homology.hpp"
#include "srpowers/monomial_ideal.hpp"
#include "srpowers/polarization.hpp"

namespace srpowers {

/// Complex whose Stanley-Reisner ideal is the given squarefree ideal, with
/// no restriction on generator degrees (degree-1 generators simply leave
/// their vertex out of every face).
SimplicialComplex complex_of_squarefree(const MonomialIdeal& ideal);

struct CleanResult {
    bool value = false;
    std::optional<ShellingCertificate> certificate;
    SimplicialComplex polar_complex;
    PolarContext context{0, {}};
    explicit operator bool() const { return value; }
};

/// Cleanness of S/I: polarize, take the complex of the polarized ideal,
/// decide shellability by exhaustive search. Throws ZeroOrUnitError.
CleanResult is_clean(const MonomialIdeal& ideal);

struct CmPair {
    bool rationals = false;
    bool gf2 = false;
};

/// Reisner's criterion on the polarized complex over both fields at once:
/// every link has vanishing reduced homology below its top dimension.
CmPair is_cohen_macaulay_both(const MonomialIdeal& ideal);

bool is_cohen_macaulay(const MonomialIdeal& ideal, Field field);

/// Link-vanishing scan used by the Cohen-Macaulay checks.
CmPair cohen_macaulay_of_complex(const SimplicialComplex& delta);

} // namespace srpowers
