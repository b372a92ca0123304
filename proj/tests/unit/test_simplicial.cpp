#include "cohomotopy/error.hpp"
#include "cohomotopy/simplicial/constructions.hpp"
#include "cohomotopy/simplicial/kernels.hpp"
#include "cohomotopy/simplicial/operations.hpp"

#include "complexes.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cohomotopy;
using namespace cohomotopy::simplicial;
using algebra::Coefficients;
using algebra::FinAbGroup;
using testsupport::Rng;

namespace {

const Coefficients Z = Coefficients::integers();
const Coefficients Z2 = Coefficients::modular(2);

IntVector random_mod2(Rng& rng, std::size_t n) { return rng.vector(n, 0, 1); }

IntVector add_mod2(IntVector a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % 2;
    return a;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("parsing facet lists") {
    auto k = parse_complex("# boundary of a tetrahedron\n0 1 2\n0 1 3\n\n0 2 3\n1 2 3\n");
    REQUIRE(k.f_vector() == std::vector<std::size_t>{4, 6, 4});
    auto rp2 = real_projective_plane();
    REQUIRE(rp2.f_vector() == std::vector<std::size_t>{6, 15, 10});
    REQUIRE(rp2.euler_characteristic() == 1);
    REQUIRE_THROWS_AS(parse_complex("0 1\n2 3\n"), Error);
    try {
        parse_complex("0 1\n2 3\n");
    } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::NotConnected);
    }
    REQUIRE_THROWS_AS(parse_complex("0 1 x\n"), Error);
    REQUIRE_THROWS_AS(parse_complex("0 1 1\n"), Error);
    auto empty = parse_complex("# nothing\n");
    REQUIRE(empty.dimension() == -1);
    REQUIRE(empty.cohomology(2, Z)->group().is_trivial());
}

TEST_CASE("labels are relabelled in increasing order") {
    auto k = parse_complex("10 30\n30 20\n");
    REQUIRE(k.labels() == std::vector<long long>{10, 20, 30});
    REQUIRE(k.simplices(1) == std::vector<Simplex>{{0, 2}, {1, 2}});
}

TEST_CASE("JSON input") {
    auto k = parse_complex(R"({"name": "tri", "vertices": [0, 1, 2], "facets": [[0, 1], [1, 2], [0, 2]]})");
    REQUIRE(k.name() == "tri");
    REQUIRE(k.cohomology(1, Z)->group() == FinAbGroup::free(1));
    auto counted = parse_complex(R"({"vertices": 2, "facets": [[0, 1]]})");
    REQUIRE(counted.vertex_count() == 2);
    REQUIRE_THROWS_AS(parse_complex(R"({"vertices": [0, 1], "facets": [[0, 5]]})"), Error);
    REQUIRE_THROWS_AS(parse_complex(R"({"facets": 3})"), Error);
    REQUIRE_THROWS_AS(parse_complex("{ not json"), Error);
}

TEST_CASE("coboundary matrices") {
    auto edge = simplex(1);
    REQUIRE(edge.coboundary_matrix(0, Z) == IntMatrix{{-1, 1}});
    auto s2 = sphere(2);
    auto d1 = s2.coboundary_matrix(1, Z);
    REQUIRE(d1.rows() == 4);
    REQUIRE(d1.cols() == 6);
    REQUIRE((d1 * s2.coboundary_matrix(0, Z)).is_zero());
    REQUIRE_THROWS_AS(s2.coboundary_matrix(2, Z), Error);
    REQUIRE_THROWS_AS(s2.coboundary_matrix(-1, Z), Error);
    auto rp2 = real_projective_plane();
    auto m = rp2.coboundary_matrix(1, Z2);
    REQUIRE(m.rows() == 10);
    REQUIRE(m.cols() == 15);
    REQUIRE(testsupport::rank_mod2(m) == 9);
}

TEST_CASE("coboundary squares to zero everywhere") {
    auto corpus = testsupport::small_corpus();
    for (const auto& k : testsupport::torsion_corpus()) corpus.push_back(k);
    for (const auto& k : corpus)
        for (int q = 0; q + 1 < k->dimension(); ++q) {
            for (const auto& c : {Z, Z2, Coefficients::modular(3), Coefficients::modular(4)}) {
                auto d = k->coboundary_matrix(q + 1, c) * k->coboundary_matrix(q, c);
                if (c.is_modular())
                    REQUIRE(d.is_zero_mod(c.modulus()));
                else
                    REQUIRE(d.is_zero());
            }
        }
}

TEST_CASE("cohomology of standard complexes") {
    REQUIRE(sphere(2).cohomology(2, Z)->group() == FinAbGroup::free(1));
    auto rp2 = real_projective_plane();
    REQUIRE(rp2.cohomology(1, Z)->group().is_trivial());
    REQUIRE(rp2.cohomology(2, Z)->group() == FinAbGroup::cyclic(2));
    REQUIRE(rp2.cohomology(1, Z2)->group() == FinAbGroup::cyclic(2));
    REQUIRE(rp2.cohomology(2, Coefficients::local(3))->group().is_trivial());
    auto t = torus();
    REQUIRE(t.cohomology(1, Z)->group() == FinAbGroup::free(2));
    REQUIRE(t.cohomology(2, Z)->group() == FinAbGroup::free(1));
    auto cp2 = complex_projective_plane();
    REQUIRE(cp2.f_vector() == std::vector<std::size_t>{9, 36, 84, 90, 36});
    REQUIRE(cp2.cohomology(1, Z)->group().is_trivial());
    REQUIRE(cp2.cohomology(2, Z)->group() == FinAbGroup::free(1));
    REQUIRE(cp2.cohomology(3, Z)->group().is_trivial());
    REQUIRE(cp2.cohomology(4, Z)->group() == FinAbGroup::free(1));
    auto m3 = mod3_moore_complex();
    REQUIRE(m3.euler_characteristic() == 1);
    REQUIRE(m3.cohomology(1, Z)->group().is_trivial());
    REQUIRE(m3.cohomology(2, Z)->group() == FinAbGroup::cyclic(3));
    REQUIRE(moebius_band().cohomology(1, Z)->group() == FinAbGroup::free(1));
    REQUIRE_THROWS_AS(t.cohomology(0, Z), Error);
}

TEST_CASE("suspension shifts cohomology") {
    auto rp2 = real_projective_plane();
    auto s = suspension(rp2);
    REQUIRE(s.cohomology(3, Z)->group() == FinAbGroup::cyclic(2));
    REQUIRE(s.cohomology(2, Z)->group().is_trivial());
    REQUIRE(s.cohomology(2, Z2)->group() == FinAbGroup::cyclic(2));
    REQUIRE(suspension(sphere(1)).cohomology(2, Z)->group() == FinAbGroup::free(1));
}

TEST_CASE("cup-0 is the front-face back-face product") {
    auto k = simplex(2);
    auto u = make_cochain(k, 1, Z2, {1, 0, 0});  // edge 01
    auto v = make_cochain(k, 1, Z2, {0, 0, 1});  // edge 12
    auto w = cup_i(u, v, 0);
    REQUIRE(w.degree == 2);
    REQUIRE(w.values == IntVector{1});
    REQUIRE(cup_i(v, u, 0).values == IntVector{0});
}

TEST_CASE("top cup-i is the pointwise product") {
    Rng rng(31);
    for (const auto& k : testsupport::small_corpus())
        for (int d = 0; d <= k->dimension(); ++d) {
            auto u = make_cochain(*k, d, Z2, random_mod2(rng, k->count(d)));
            auto v = make_cochain(*k, d, Z2, random_mod2(rng, k->count(d)));
            auto w = cup_i(u, v, static_cast<unsigned>(d));
            for (std::size_t s = 0; s < w.values.size(); ++s) REQUIRE(w.values[s] == u.values[s] * v.values[s]);
        }
}

TEST_CASE("cup-i coboundary identity on random complexes") {
    Rng rng(0x1d3);
    for (int trial = 0; trial < 60; ++trial) {
        auto k = testsupport::random_complex(rng, 6, 12);
        for (int p = 0; p <= k.dimension(); ++p)
            for (int q = 0; q <= k.dimension(); ++q)
                for (int i = 0; i <= std::min(p, q); ++i) {
                    if (p + q - i + 1 > k.dimension() + 1) continue;
                    auto u = make_cochain(k, p, Z2, random_mod2(rng, k.count(p)));
                    auto v = make_cochain(k, q, Z2, random_mod2(rng, k.count(q)));
                    IntVector lhs = coboundary(cup_i(u, v, static_cast<unsigned>(i))).values;
                    for (auto& x : lhs) x = algebra::mod(x, 2);
                    IntVector rhs(lhs.size());
                    if (i > 0) {
                        rhs = add_mod2(rhs, cup_i(u, v, static_cast<unsigned>(i - 1)).values);
                        rhs = add_mod2(rhs, cup_i(v, u, static_cast<unsigned>(i - 1)).values);
                    }
                    auto du = make_cochain(k, p + 1, Z2, coboundary(u).values);
                    auto dv = make_cochain(k, q + 1, Z2, coboundary(v).values);
                    if (i <= p + 1 && i <= q) rhs = add_mod2(rhs, cup_i(du, v, static_cast<unsigned>(i)).values);
                    if (i <= p && i <= q + 1) rhs = add_mod2(rhs, cup_i(u, dv, static_cast<unsigned>(i)).values);
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("cup squares on the tetrahedron boundary and RP2") {
    auto s2 = sphere(2);
    auto h1 = s2.cohomology(1, Z2);
    // Every mod-2 1-cocycle: its square evaluates to zero on the fundamental cycle.
    testsupport::for_each_residue_vector(s2.count(1), 2, [&](const IntVector& x) {
        if (!h1->is_cocycle(x)) return;
        auto u = make_cochain(s2, 1, Z2, x);
        auto sq = cup_i(u, u, 0);
        Integer total = 0;
        for (const auto& y : sq.values) total += y;
        REQUIRE(total % 2 == 0);
    });
    auto rp2 = real_projective_plane();
    auto x = class_from_coordinates(rp2, 1, Z2, {1});
    auto sq = cup_i(x.representative, x.representative, 0);
    Integer total = 0;
    for (const auto& y : sq.values) total += y;
    REQUIRE(total % 2 == 1);
    REQUIRE(class_of(sq).coordinates == IntVector{1});
}

TEST_CASE("Steenrod square axioms and Sq1 on RP2") {
    auto rp2 = real_projective_plane();
    auto x = class_from_coordinates(rp2, 1, Z2, {1});
    REQUIRE(steenrod_square(0, x).coordinates == x.coordinates);
    REQUIRE(steenrod_square(1, x).coordinates == IntVector{1});
    REQUIRE(steenrod_square(2, x).representative.values.empty());
    REQUIRE(bockstein(1, x).coordinates == IntVector{1});
    auto integral = class_from_coordinates(rp2, 1, Coefficients::modular(3), {});
    REQUIRE_THROWS_AS(steenrod_square(1, integral), Error);
    auto beta = induced_operation_matrix(rp2, InducedOperation::bockstein(2, 1), 1);
    REQUIRE(beta.matrix() == IntMatrix{{1}});
}

TEST_CASE("Sq1 agrees with the Bockstein on every corpus complex") {
    auto corpus = testsupport::small_corpus();
    for (const auto& k : testsupport::torsion_corpus()) corpus.push_back(k);
    for (const auto& k : corpus)
        for (int n = 1; n < k->dimension(); ++n) {
            auto sq = induced_operation_matrix(*k, InducedOperation::square(1), n);
            auto beta = induced_operation_matrix(*k, InducedOperation::bockstein(2, 1), n);
            REQUIRE(sq.matrix() == beta.matrix());
        }
}

TEST_CASE("Bockstein of a reduced integral class vanishes") {
    Rng rng(8);
    for (const auto& k : testsupport::torsion_corpus())
        for (int n = 1; n < k->dimension(); ++n) {
            auto hz = k->cohomology(n, Z);
            for (int trial = 0; trial < 5; ++trial) {
                IntVector coords = rng.vector(hz->generator_count(), -3, 3);
                auto c = class_from_coordinates(*k, n, Z, coords);
                for (unsigned r : {1u, 2u}) {
                    auto reduced = coefficient_change(c, CoefficientMap::reduce(Coefficients::modular(algebra::pow(2, r))));
                    REQUIRE(is_zero(bockstein(r, reduced).coordinates));
                }
            }
        }
}

TEST_CASE("mod-3 Bockstein on the suspended Moore complex") {
    auto m = suspension(mod3_moore_complex());
    auto beta = induced_operation_matrix(m, InducedOperation::bockstein(3, 1), 2);
    REQUIRE(beta.source() == FinAbGroup::cyclic(3));
    REQUIRE(beta.target() == FinAbGroup::cyclic(3));
    REQUIRE(algebra::is_injective(beta));
    auto x = class_from_coordinates(m, 2, Coefficients::modular(3), {1});
    REQUIRE_FALSE(is_zero(bockstein(1, x).coordinates));
}

TEST_CASE("coefficient changes") {
    auto rp2 = real_projective_plane();
    auto gen = class_from_coordinates(rp2, 2, Z, {1});
    auto reduced = coefficient_change(gen, CoefficientMap::reduce(Z2));
    REQUIRE(reduced.coordinates == IntVector{1});
    auto zero = class_from_coordinates(rp2, 2, Z, {0});
    REQUIRE(is_zero(coefficient_change(zero, CoefficientMap::multiply(2, Coefficients::modular(4))).coordinates));
    auto t = torus();
    const auto z4 = Coefficients::modular(4);
    auto h = t.cohomology(1, z4);
    REQUIRE(h->group() == FinAbGroup(0, {4, 4}));
    for (long long a = 0; a < 4; ++a)
        for (long long b = 0; b < 4; ++b) {
            auto c = class_from_coordinates(t, 1, z4, {a, b});
            auto down = coefficient_change(c, CoefficientMap::reduce(Z2));
            auto up = coefficient_change(down, CoefficientMap::multiply(2, z4));
            REQUIRE(up.coordinates == IntVector{(2 * a) % 4, (2 * b) % 4});
        }
    auto mod2 = class_from_coordinates(t, 1, Z2, {1, 0});
    REQUIRE_THROWS_AS(coefficient_change(mod2, CoefficientMap::reduce(z4)), Error);
}

TEST_CASE("reduced Sq2 on the suspension of CP2 is onto") {
    auto s = suspension(complex_projective_plane());
    REQUIRE(s.cohomology(3, Z)->group() == FinAbGroup::free(1));
    REQUIRE(s.cohomology(5, Z2)->group() == FinAbGroup::cyclic(2));
    auto sq = induced_operation_matrix(s, InducedOperation::reduced_square(Z), 3);
    REQUIRE(algebra::is_surjective(sq));
    auto zero_source = induced_operation_matrix(s, InducedOperation::square(2), 1);
    REQUIRE(zero_source.source().is_trivial());
    REQUIRE(zero_source.is_zero());
}

TEST_CASE("Sq2 on CP2 is the cup square") {
    auto cp2 = complex_projective_plane();
    auto x = class_from_coordinates(cp2, 2, Z2, {1});
    auto sq = steenrod_square(2, x);
    REQUIRE(sq.coordinates == IntVector{1});
    REQUIRE(class_of(cup_i(x.representative, x.representative, 0)).coordinates == sq.coordinates);
    REQUIRE(is_zero(steenrod_square(1, x).coordinates));
}

TEST_CASE("Steenrod axioms hold for all classes of the corpus") {
    auto corpus = testsupport::small_corpus();
    for (const auto& k : testsupport::torsion_corpus()) corpus.push_back(k);
    for (const auto& k : corpus)
        for (int n = 1; n <= k->dimension(); ++n) {
            auto h = k->cohomology(n, Z2);
            for (std::size_t g = 0; g < h->generator_count(); ++g) {
                IntVector e(h->generator_count());
                e[g] = 1;
                auto c = class_from_coordinates(*k, n, Z2, e);
                REQUIRE(steenrod_square(0, c).coordinates == c.coordinates);
                REQUIRE(steenrod_square(static_cast<unsigned>(n), c).coordinates ==
                        class_of(cup_i(c.representative, c.representative, 0)).coordinates);
                for (unsigned extra = 1; extra <= 2; ++extra)
                    REQUIRE(is_zero(steenrod_square(static_cast<unsigned>(n) + extra, c).coordinates));
            }
        }
}

TEST_CASE("Cartan formula for Sq1 on random classes") {
    Rng rng(0xca27);
    auto corpus = testsupport::torsion_corpus();
    corpus.push_back(std::make_shared<SimplicialComplex>(wedge(real_projective_plane(), torus())));
    for (const auto& k : corpus)
        for (int a = 1; a <= k->dimension(); ++a)
            for (int b = 1; a + b + 1 <= k->dimension(); ++b)
                for (int trial = 0; trial < 6; ++trial) {
                    auto x = class_from_coordinates(*k, a, Z2, rng.vector(k->cohomology(a, Z2)->generator_count(), 0, 1));
                    auto y = class_from_coordinates(*k, b, Z2, rng.vector(k->cohomology(b, Z2)->generator_count(), 0, 1));
                    auto xy = class_of(cup_i(x.representative, y.representative, 0));
                    auto lhs = steenrod_square(1, xy);
                    auto left = cup_i(steenrod_square(1, x).representative, y.representative, 0);
                    auto right = cup_i(x.representative, steenrod_square(1, y).representative, 0);
                    auto sum = make_cochain(*k, a + b + 1, Z2, add_mod2(left.values, right.values));
                    REQUIRE(class_of(sum).coordinates == lhs.coordinates);
                }
}

TEST_CASE("operations commute with restriction to subcomplexes") {
    Rng rng(0x4a7);
    auto ambient = testsupport::torsion_corpus();
    ambient.push_back(std::make_shared<SimplicialComplex>(wedge(real_projective_plane(), torus())));
    ambient.push_back(std::make_shared<SimplicialComplex>(complex_projective_plane()));
    int checked = 0;
    for (const auto& x : ambient) {
        auto facets = x->facets();
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<long long>> kept;
            for (const auto& f : facets)
                if (rng.coin(0.75)) {
                    std::vector<long long> g;
                    for (int v : f) g.push_back(x->label(v));
                    kept.push_back(std::move(g));
                }
            if (kept.empty()) continue;
            std::unique_ptr<SimplicialComplex> a;
            try {
                a = std::make_unique<SimplicialComplex>(SimplicialComplex::from_facets(kept, "sub"));
            } catch (const Error&) {
                continue;
            }
            for (int n = 1; n < a->dimension(); ++n) {
                auto restrict_at = [&](int degree, const Coefficients& c) {
                    IntMatrix r = restriction_matrix(*x, *a, degree);
                    return algebra::induced_map(*x->cohomology(degree, c), *a->cohomology(degree, c),
                                                [&](const IntVector& u) {
                                                    IntVector w = r.apply(u);
                                                    if (c.is_modular())
                                                        for (auto& e : w) e = algebra::mod(e, c.modulus());
                                                    return w;
                                                });
                };
                for (unsigned k : {1u, 2u}) {
                    if (n + static_cast<int>(k) > a->dimension()) continue;
                    auto top = compose(restrict_at(n + static_cast<int>(k), Z2),
                                       induced_operation_matrix(*x, InducedOperation::square(k), n));
                    auto bottom = compose(induced_operation_matrix(*a, InducedOperation::square(k), n), restrict_at(n, Z2));
                    REQUIRE(top.matrix() == bottom.matrix());
                }
                auto top = compose(restrict_at(n + 1, Z2), induced_operation_matrix(*x, InducedOperation::bockstein(2, 1), n));
                auto bottom =
                    compose(induced_operation_matrix(*a, InducedOperation::bockstein(2, 1), n), restrict_at(n, Z2));
                REQUIRE(top.matrix() == bottom.matrix());
                ++checked;
            }
        }
    }
    REQUIRE(checked > 10);
}

TEST_CASE("restriction rejects non-subcomplexes") {
    REQUIRE_THROWS_AS(restriction_matrix(sphere(1), simplex(2), 2), Error);
    REQUIRE_THROWS_AS(restriction_matrix(sphere(1), sphere(2), 0), Error);
    auto r = restriction_matrix(simplex(2), sphere(1), 1);
    REQUIRE(r == IntMatrix::identity(3));
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
    Rng rng(0x9a2);
    auto cp2 = suspension(complex_projective_plane());
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int i = 0; i <= std::min(p, q); ++i) {
                auto plan = kernels::make_cup_plan(p, q, i);
                if (plan.n > cp2.dimension()) continue;
                kernels::Bits u(cp2.count(p)), v(cp2.count(q));
                for (auto& b : u) b = static_cast<std::uint8_t>(rng.coin());
                for (auto& b : v) b = static_cast<std::uint8_t>(rng.coin());
                REQUIRE(kernels::cup_i_serial(cp2, plan, u, v) == kernels::cup_i_parallel(cp2, plan, u, v));
            }
    for (int d = 0; d < cp2.dimension(); ++d) {
        IntVector u = rng.vector(cp2.count(d), -5, 5);
        auto serial = kernels::coboundary_serial(cp2, d, u);
        REQUIRE(serial == kernels::coboundary_parallel(cp2, d, u));
        REQUIRE(serial == cp2.cochains().apply_coboundary(d, u));
        kernels::Bits b(cp2.count(d));
        for (std::size_t s = 0; s < b.size(); ++s) b[s] = static_cast<std::uint8_t>(algebra::mod(u[s], 2) != 0);
        REQUIRE(kernels::coboundary_bits_serial(cp2, d, b) == kernels::coboundary_bits_parallel(cp2, d, b));
    }
    REQUIRE_THROWS_AS(kernels::make_cup_plan(1, 2, 2), Error);
}

TEST_CASE("mixed complexes and bad indices") {
    auto a = sphere(1);
    auto b = sphere(1);
    auto u = make_cochain(a, 1, Z2, {1, 0, 0});
    auto v = make_cochain(b, 1, Z2, {1, 0, 0});
    REQUIRE_THROWS_AS(cup_i(u, v, 0), Error);
    REQUIRE_THROWS_AS(cup_i(u, u, 2), Error);
    REQUIRE_THROWS_AS(make_cochain(a, 1, Z2, {1}), Error);
}
