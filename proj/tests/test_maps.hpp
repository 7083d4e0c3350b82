#pragma once

// Hand-built presentations of the regular lattices, independent of the
// catalog module, for use as fixtures.

#include "treevol/torus_map.hpp"

namespace fixtures {

inline treevol::ToroidalMap square() {
    treevol::MapBuilder b("square");
    const int v = b.add_vertex(0.0, 0.0);
    b.add_edge(v, v, {1, 0});
    b.add_edge(v, v, {0, 1});
    return b.build();
}

inline treevol::ToroidalMap triangular() {
    treevol::MapBuilder b("triangular");
    const int v = b.add_vertex(0.0, 0.0);
    b.add_edge(v, v, {1, 0});
    b.add_edge(v, v, {0, 1});
    b.add_edge(v, v, {-1, 1});
    return b.build();
}

inline treevol::ToroidalMap hexagonal() {
    treevol::MapBuilder b("hexagonal");
    const int u = b.add_vertex(0.0, 0.0);
    const int w = b.add_vertex(1.0 / 3.0, 1.0 / 3.0);
    b.add_edge(u, w, {0, 0});
    b.add_edge(u, w, {-1, 0});
    b.add_edge(u, w, {0, -1});
    return b.build();
}

}  // namespace fixtures
