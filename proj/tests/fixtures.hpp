#pragma once

#include <string>

#include "graphprod/word.hpp"

namespace fixtures {

// Pentagon 0-1-2-3-4-0, one Z2 per vertex.
gp::GraphProduct c5_racg();
// Star with center w: u-w, v-w, z-w; one Z2 per vertex. Vertex order u,v,w,z.
gp::GraphProduct k13_racg();
// Path a-b-c with Z2, Z3, Z2.
gp::GraphProduct z2_z3_z2_path();
// Two vertices, no edge, both Z2 (free product).
gp::GraphProduct z2_z2_free();
// Path a-b-c, one Z2 per vertex.
gp::GraphProduct p3_racg();
// Pentagon with one infinite cyclic vertex group at vertex 0, Z2 elsewhere.
gp::GraphProduct c5_one_int();
// Two pentagons glued at one vertex (molecular but not atomic), all Z2.
gp::GraphProduct two_pentagons_racg();
// Triangle 0-1-2 with Z2 everywhere (complete graph).
gp::GraphProduct k3_racg();

// Word shorthand for involutive generators: w(product, {0,2,0}) etc.
gp::Word involutions(const std::vector<int>& vertices);

}  // namespace fixtures
