#include "srpowers/cleanness.hpp"

#include <algorithm>

#include "face_scan.hpp"

namespace srpowers {

SimplicialComplex complex_of_squarefree(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw NotSquarefreeError();
    std::vector<VertexSet> supports;
    supports.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) supports.push_back(g.support());
    std::vector<VertexSet> facets;
    for (const auto& t : minimal_transversals(supports))
        facets.push_back(t.complement_in(ideal.arity()));
    return SimplicialComplex(ideal.arity(), std::move(facets));
}

CleanResult is_clean(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) throw ZeroOrUnitError();
    PolarizedIdeal polar = polarize_ideal(ideal);
    SimplicialComplex complex = complex_of_squarefree(polar.ideal);
    CleanResult out{false, std::nullopt, complex, polar.context};
    auto cert = find_shelling(complex);
    if (cert) {
        out.value = true;
        out.certificate = std::move(cert);
    }
    return out;
}

CmPair cohen_macaulay_of_complex(const SimplicialComplex& delta) {
    if (delta.is_void()) return {true, true};
    std::vector<std::uint64_t> bits;
    bits.reserve(delta.facets().size());
    for (const auto& f : delta.facets()) bits.push_back(f.bits());
    auto scan = detail::cohen_macaulay_scan(detail::compact_facets(bits));
    return {scan.first, scan.second};
}

CmPair is_cohen_macaulay_both(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) throw ZeroOrUnitError();
    PolarizedIdeal polar = polarize_ideal(ideal);
    return cohen_macaulay_of_complex(complex_of_squarefree(polar.ideal));
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, Field field) {
    CmPair pair = is_cohen_macaulay_both(ideal);
    return field == Field::rationals ? pair.rationals : pair.gf2;
}

} // namespace srpowers
