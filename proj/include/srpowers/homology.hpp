#pragma once

#include <string>
#include <vector>

#include "srpowers/simplicial_complex.hpp"

namespace srpowers {

enum class Field { rationals, gf2 };

std::string field_name(Field f);

/// Reduced homology ranks per dimension, from -1 up to dim. The void complex
/// has an empty profile; <{}> has rank 1 in dimension -1.
struct HomologyProfile {
    Field field = Field::rationals;
    std::vector<long long> ranks;   // ranks[i] is the rank in dimension i-1

    long long rank(int dim) const {
        int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
        return ranks[idx];
    }
    int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
    bool all_zero() const {
        for (auto r : ranks)
            if (r != 0) return false;
        return true;
    }
    std::string to_string() const;
};

/// Exact boundary-matrix ranks: integer elimination with unit pivots shared
/// across fields, fraction-free elimination for the rational leftover, GF(2)
/// elimination for the mod-2 leftover.
HomologyProfile reduced_homology(const SimplicialComplex& delta, Field field);

struct HomologyPair {
    HomologyProfile rationals;
    HomologyProfile gf2;
};

HomologyPair reduced_homology_both(const SimplicialComplex& delta);

} // namespace srpowers
