#include "cohomotopy/simplicial/constructions.hpp"

#include "cohomotopy/error.hpp"

namespace cohomotopy::simplicial {

namespace {

using Facets = std::vector<std::vector<long long>>;

Facets relabelled_facets(const SimplicialComplex& k, long long offset, bool keep_zero) {
    Facets out;
    for (const auto& f : k.facets()) {
        std::vector<long long> g;
        for (int v : f) g.push_back(keep_zero && v == 0 ? 0 : v + offset);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

SimplicialComplex simplex(int d) {
    if (d < 0) raise(ErrorCode::InvalidArgument, "simplex dimension must be >= 0");
    std::vector<long long> f;
    for (int v = 0; v <= d; ++v) f.push_back(v);
    return SimplicialComplex::from_facets({f}, "simplex(" + std::to_string(d) + ")");
}

SimplicialComplex sphere(int n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "sphere dimension must be >= 1");
    Facets facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<long long> f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets, "sphere(" + std::to_string(n) + ")");
}

SimplicialComplex real_projective_plane() {
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
                                          "rp2");
}

SimplicialComplex torus() {
    Facets facets;
    for (long long i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(facets, "torus");
}

SimplicialComplex moebius_band() {
    Facets facets;
    for (long long i = 0; i < 5; ++i) facets.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return SimplicialComplex::from_facets(facets, "moebius");
}

SimplicialComplex complex_projective_plane() {
    return SimplicialComplex::from_facets(
        {{1, 2, 4, 5, 6}, {2, 3, 5, 6, 4}, {3, 1, 6, 4, 5}, {1, 2, 4, 5, 9}, {2, 3, 5, 6, 7}, {3, 1, 6, 4, 8},
         {2, 3, 6, 4, 9}, {3, 1, 4, 5, 7}, {1, 2, 5, 6, 8}, {3, 1, 5, 6, 9}, {1, 2, 6, 4, 7}, {2, 3, 4, 5, 8},
         {4, 5, 7, 8, 9}, {5, 6, 8, 9, 7}, {6, 4, 9, 7, 8}, {4, 5, 7, 8, 3}, {5, 6, 8, 9, 1}, {6, 4, 9, 7, 2},
         {5, 6, 9, 7, 3}, {6, 4, 7, 8, 1}, {4, 5, 8, 9, 2}, {6, 4, 8, 9, 3}, {4, 5, 9, 7, 1}, {5, 6, 7, 8, 2},
         {7, 8, 1, 2, 3}, {8, 9, 2, 3, 1}, {9, 7, 3, 1, 2}, {7, 8, 1, 2, 6}, {8, 9, 2, 3, 4}, {9, 7, 3, 1, 5},
         {8, 9, 3, 1, 6}, {9, 7, 1, 2, 4}, {7, 8, 2, 3, 5}, {9, 7, 2, 3, 6}, {7, 8, 3, 1, 4}, {8, 9, 1, 2, 5}},
        "cp2");
}

SimplicialComplex mod3_moore_complex() {
    // Vertex 0 is the centre, 1..9 the inner ring, 10..12 the triangle.
    Facets facets;
    auto ring = [](long long i) { return 1 + (i % 9); };
    auto tri = [](long long i) { return 10 + (i % 3); };
    for (long long i = 0; i < 9; ++i) {
        facets.push_back({0, ring(i), ring(i + 1)});
        facets.push_back({ring(i), ring(i + 1), tri(i)});
        facets.push_back({ring(i + 1), tri(i), tri(i + 1)});
    }
    return SimplicialComplex::from_facets(facets, "moore3");
}

SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto facets = relabelled_facets(a, 0, false);
    auto rest = relabelled_facets(b, static_cast<long long>(a.vertex_count()) - 1, true);
    facets.insert(facets.end(), rest.begin(), rest.end());
    return SimplicialComplex::from_facets(facets, a.name() + "_v_" + b.name());
}

SimplicialComplex cone(const SimplicialComplex& k) {
    auto facets = relabelled_facets(k, 0, false);
    const auto apex = static_cast<long long>(k.vertex_count());
    for (auto& f : facets) f.push_back(apex);
    if (facets.empty()) facets.push_back({0});
    return SimplicialComplex::from_facets(facets, "cone(" + k.name() + ")");
}

} // namespace cohomotopy::simplicial
