#include <catch2/catch_amalgamated.hpp>

#include "test_maps.hpp"
#include "treevol/torus_map.hpp"

#include <algorithm>
#include <set>

using namespace treevol;

namespace {
std::multiset<int> face_degrees(const ToroidalMap& m) {
    std::multiset<int> out;
    for (const auto& f : faces(m)) out.insert(f.degree());
    return out;
}
}  // namespace

TEST_CASE("square lattice validates with one quad face") {
    const auto m = fixtures::square();
    const auto d = validate(m);
    CHECK(d.rotation_ok);
    CHECK(d.shift_antisymmetric);
    CHECK(d.connected);
    CHECK(d.euler_zero);
    CHECK(d.faces_are_disks);
    CHECK(d.loop_free);
    CHECK(d.two_connected);
    CHECK(d.three_connected);
    REQUIRE(d.valid());
    const auto fs = faces(m);
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].degree() == 4);
}

TEST_CASE("triangular lattice has two triangle faces") {
    const auto m = fixtures::triangular();
    REQUIRE(validate(m).valid());
    REQUIRE(face_degrees(m) == std::multiset<int>{3, 3});
}

TEST_CASE("hexagonal lattice has one hexagon face") {
    const auto m = fixtures::hexagonal();
    REQUIRE(validate(m).valid());
    REQUIRE(face_degrees(m) == std::multiset<int>{6});
    REQUIRE(m.degree(0) == 3);
    REQUIRE(m.degree(1) == 3);
}

TEST_CASE("face walks partition the darts") {
    for (const auto& m :
         {fixtures::square(), fixtures::triangular(), fixtures::hexagonal()}) {
        const auto fs = faces(m);
        int total = 0;
        std::vector<char> seen(m.dart_count(), 0);
        for (const auto& f : fs)
            for (int d : f.darts) {
                REQUIRE(!seen[d]);
                seen[d] = 1;
                ++total;
            }
        REQUIRE(total == m.dart_count());
    }
}

TEST_CASE("non-cellular embedding is reported, not fatal") {
    // one vertex, one edge: both faces pick up homology, Euler fails
    MapBuilder b;
    const int v = b.add_vertex(0.0, 0.0);
    b.add_edge(v, v, {1, 0});
    const auto m = b.build();
    const auto d = validate(m);
    CHECK(d.rotation_ok);
    CHECK(!d.euler_zero);
    CHECK(!d.faces_are_disks);
    REQUIRE(!d.valid());
}

TEST_CASE("contractible loop is flagged") {
    MapBuilder b;
    const int v = b.add_vertex();
    b.add_edge(v, v, {1, 0});
    b.add_edge(v, v, {0, 1});
    b.add_edge(v, v, {0, 0});  // contractible
    b.set_rotation(v, {0, 4, 2, 1, 5, 3});
    const auto d = validate(b.build());
    CHECK(!d.loop_free);
}

TEST_CASE("equal dart directions are a hard error") {
    MapBuilder b;
    const int u = b.add_vertex(0.0, 0.0);
    const int w = b.add_vertex(0.5, 0.0);
    b.add_edge(u, w, {0, 0});
    b.add_edge(u, w, {0, 0});  // parallel, same geometric direction
    REQUIRE_THROWS(b.build());
}

TEST_CASE("raw positions outside the unit cell are normalized") {
    // same square lattice, but the vertex parked at (-0.3, 1.4)
    MapBuilder b;
    const int v = b.add_vertex(-0.3, 1.4);
    b.add_edge(v, v, {1, 0});
    b.add_edge(v, v, {0, 1});
    const auto m = b.build();
    REQUIRE(validate(m).valid());
    REQUIRE(m.position(0).x == Catch::Approx(0.7));
    REQUIRE(m.position(0).y == Catch::Approx(0.4));
    REQUIRE(isomorphic(m, fixtures::square()));
}

TEST_CASE("cover sizes and incidences") {
    const auto sq = fixtures::square();
    auto c = cover(sq, 2, 2);
    REQUIRE(c.n == 4);
    REQUIRE(c.edges.size() == 8);
    std::vector<int> deg(c.n, 0);
    for (auto [u, v] : c.edges) {
        deg[u]++;
        deg[v]++;
    }
    for (int v = 0; v < c.n; ++v) REQUIRE(deg[v] == 4);

    auto c1 = cover(sq, 1, 1);
    REQUIRE(c1.n == 1);
    REQUIRE(c1.edges.size() == 2);  // two loops

    auto hx = cover(fixtures::hexagonal(), 3, 3);
    REQUIRE(hx.n == 18);
    REQUIRE(hx.edges.size() == 27);
}

TEST_CASE("refine is a torus map with replicated faces") {
    for (const auto& m :
         {fixtures::square(), fixtures::triangular(), fixtures::hexagonal()}) {
        const auto r = refine(m, 2, 3);
        REQUIRE(validate(r).well_formed());
        REQUIRE(r.vertex_count() == 6 * m.vertex_count());
        REQUIRE(r.edge_count() == 6 * m.edge_count());
        std::multiset<int> fr, want;
        for (const auto& f : faces(r)) fr.insert(f.degree());
        for (int i = 0; i < 6; ++i)
            for (const auto& f : faces(m)) want.insert(f.degree());
        REQUIRE(fr == want);
    }
}

TEST_CASE("isomorphism distinguishes and identifies") {
    REQUIRE(isomorphic(fixtures::square(), fixtures::square()));
    REQUIRE(!isomorphic(fixtures::square(), fixtures::triangular()));
    REQUIRE(!isomorphic(fixtures::triangular(), fixtures::hexagonal()));

    // square presented with the other edge order and a shifted origin
    MapBuilder b;
    const int v = b.add_vertex(0.25, 0.75);
    b.add_edge(v, v, {0, 1});
    b.add_edge(v, v, {1, 0});
    REQUIRE(isomorphic(b.build(), fixtures::square()));
}
