#include "srpowers/homology.hpp"

#include "face_scan.hpp"

namespace srpowers {

std::string field_name(Field f) {
    return f == Field::rationals ? "Q" : "F2";
}

std::string HomologyProfile::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (!s.empty()) s += ' ';
        s += "H~" + std::to_string(static_cast<int>(i) - 1) + "=" + std::to_string(ranks[i]);
    }
    return s.empty() ? "(void)" : s;
}

HomologyPair reduced_homology_both(const SimplicialComplex& delta) {
    std::vector<std::uint64_t> bits;
    bits.reserve(delta.facets().size());
    for (const auto& f : delta.facets()) bits.push_back(f.bits());
    detail::LevelRanks ranks = detail::homology_of_facets(detail::compact_facets(bits));
    HomologyPair out;
    out.rationals.field = Field::rationals;
    out.rationals.ranks = std::move(ranks.q);
    out.gf2.field = Field::gf2;
    out.gf2.ranks = std::move(ranks.f2);
    return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& delta, Field field) {
    auto pair = reduced_homology_both(delta);
    return field == Field::rationals ? pair.rationals : pair.gf2;
}

} // namespace srpowers
