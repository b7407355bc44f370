// scratch performance probe; not part of the build
#include <chrono>
#include <iostream>

#include "srpowers/cleanness.hpp"
#include "srpowers/monomial_ideal.hpp"
#include "srpowers/polarization.hpp"

using namespace srpowers;

static SimplicialComplex cycle(int n) {
    std::vector<VertexSet> facets;
    for (int i = 1; i < n; ++i) facets.push_back(VertexSet{i, i + 1});
    facets.push_back(VertexSet{1, n});
    return SimplicialComplex(n, facets);
}

static SimplicialComplex complete_graph(int n) {
    std::vector<VertexSet> facets;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) facets.push_back(VertexSet{i, j});
    return SimplicialComplex(n, facets);
}

static void time_clean(const std::string& label, const SimplicialComplex& delta, int m) {
    auto start = std::chrono::steady_clock::now();
    auto ideal = symbolic_power(delta, m);
    auto mid = std::chrono::steady_clock::now();
    auto result = is_clean(ideal);
    auto end = std::chrono::steady_clock::now();
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::cout << label << ": clean=" << result.value << " facets=" << result.polar_complex.facets().size()
              << " gens=" << ideal.generators().size() << " symbolic=" << ms(start, mid)
              << "ms search=" << ms(mid, end) << "ms\n";
}

static void time_cm(const std::string& label, const SimplicialComplex& delta, int m) {
    auto ideal = symbolic_power(delta, m);
    auto start = std::chrono::steady_clock::now();
    auto cm = is_cohen_macaulay_both(ideal);
    auto end = std::chrono::steady_clock::now();
    std::cout << label << ": cmQ=" << cm.rationals << " cmF2=" << cm.gf2 << " "
              << std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count() << "ms\n";
}

int main() {
    auto c5 = cycle(5);
    auto c6 = cycle(6);
    auto k5 = complete_graph(5);

    time_clean("C5 m=2 (clean)", c5, 2);
    time_clean("C5 m=3 (not clean, refutation)", c5, 3);
    time_clean("C6 m=2 (not clean, refutation)", c6, 2);
    time_clean("K5 m=2 (clean)", k5, 2);
    time_clean("K5 m=3 (clean, 100 facets)", k5, 3);

    time_cm("C5 m=2 CM", c5, 2);
    time_cm("C5 m=3 CM", c5, 3);
    time_cm("C6 m=2 CM", c6, 2);
    time_cm("K5 m=3 CM", k5, 3);
    return 0;
}
