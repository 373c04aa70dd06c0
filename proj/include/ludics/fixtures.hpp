#pragma once

#include "ludics/connectives.hpp"
#include "ludics/orthogonality.hpp"
#include "ludics/paths.hpp"

// Curated designs and workbenches shared by tests, the CLI demo and the Python module.
namespace ludics::fixtures {

Signature fig1_signature();  // a/2 b/1 c/0
Design fig1_p();             // x0|a<{b(x1) => x1|c<>}, {b(x2) => x2|c<>}>
Design fig1_n();
Sequence path_fig1();        // x0|a<y1,y2> b^y1(x1) x1|c<> b^y2(x2) x2|c<>

// the two paths of the displayed shuffle example and its two interleavings
Sequence shuffle_left();
Sequence shuffle_right();
PathSet shuffle_expected();

// Negative workbench over unary `step` and nullary `stop`:
//   generators step(y).y|stop<> and step(y).daimon,
//   testers daimon and x0|step<{stop() => daimon}>.
BehaviourWorkbench regular_negative(const std::string& label = "N", const Name& step = "a", const Name& stop = "b");

}  // namespace ludics::fixtures
