#pragma once

#include <string>
#include <vector>

#include "skh/diagram.hpp"

namespace skh::catalog {

TangleDiagram identity(int n);

/// Braid on n strands from a word of nonzero generators: +i is X+ i, -i is X- i.
TangleDiagram braid(int n, const std::vector<int>& word);

/// Knots cut open at a point, as (1,1)-tangles.
TangleDiagram unknot_cut();
TangleDiagram trefoil_cut();
TangleDiagram figure_eight_cut();

/// Two strands capped off at the bottom and reborn at the top.
TangleDiagram turnback();

/// One closed circle and no endpoints.
TangleDiagram cupcap_unknot();

}  // namespace skh::catalog
