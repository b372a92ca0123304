#pragma once

#include "cohomotopy/error.hpp"
#include "cohomotopy/simplicial/constructions.hpp"

#include "generators.hpp"

#include <memory>
#include <vector>

namespace testsupport {

using cohomotopy::simplicial::SimplicialComplex;

inline std::size_t total_simplices(const SimplicialComplex& k) {
    std::size_t n = 0;
    for (auto f : k.f_vector()) n += f;
    return n;
}

/// Connected complex on at most `max_vertices` vertices with at most `max_simplices` simplices.
inline SimplicialComplex random_complex(Rng& rng, int max_vertices, std::size_t max_simplices) {
    namespace s = cohomotopy::simplicial;
    for (;;) {
        int v = static_cast<int>(rng.uniform(2, max_vertices));
        std::vector<std::vector<long long>> facets;
        for (long long x = 0; x + 1 < v; ++x) facets.push_back({x, x + 1});
        int extra = static_cast<int>(rng.uniform(1, 4));
        for (int e = 0; e < extra; ++e) {
            int size = static_cast<int>(rng.uniform(2, std::min(4, v)));
            std::vector<long long> f;
            while (static_cast<int>(f.size()) < size) {
                long long x = rng.uniform(0, v - 1);
                if (std::find(f.begin(), f.end(), x) == f.end()) f.push_back(x);
            }
            facets.push_back(std::move(f));
        }
        auto k = SimplicialComplex::from_facets(facets, "random");
        if (total_simplices(k) <= max_simplices) return k;
    }
}

/// Complexes with at most 30 simplices.
inline std::vector<std::shared_ptr<SimplicialComplex>> small_corpus() {
    namespace s = cohomotopy::simplicial;
    std::vector<std::shared_ptr<SimplicialComplex>> out;
    auto add = [&](SimplicialComplex k) { out.push_back(std::make_shared<SimplicialComplex>(std::move(k))); };
    add(s::sphere(1));
    add(s::sphere(2));
    add(s::sphere(3));
    add(s::simplex(1));
    add(s::simplex(2));
    add(s::moebius_band());
    add(s::wedge(s::sphere(1), s::sphere(1)));
    add(s::wedge(s::sphere(1), s::sphere(2)));
    add(s::wedge(s::sphere(2), s::sphere(2)));
    add(s::cone(s::sphere(1)));
    add(s::suspension(s::sphere(1)));
    add(s::wedge(s::sphere(1), s::moebius_band()));
    Rng rng(0xc0de);
    for (int i = 0; i < 4; ++i) add(random_complex(rng, 6, 30));
    return out;
}

/// Larger complexes with torsion and nontrivial operations.
inline std::vector<std::shared_ptr<SimplicialComplex>> torsion_corpus() {
    namespace s = cohomotopy::simplicial;
    std::vector<std::shared_ptr<SimplicialComplex>> out;
    auto add = [&](SimplicialComplex k) { out.push_back(std::make_shared<SimplicialComplex>(std::move(k))); };
    add(s::real_projective_plane());
    add(s::suspension(s::real_projective_plane()));
    add(s::torus());
    add(s::mod3_moore_complex());
    add(s::wedge(s::real_projective_plane(), s::sphere(1)));
    return out;
}

} // namespace testsupport
