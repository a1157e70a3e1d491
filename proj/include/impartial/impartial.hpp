#pragma once

// Umbrella header.

#include "impartial/census.hpp"
#include "impartial/counting.hpp"
#include "impartial/graph.hpp"
#include "impartial/impartiality.hpp"
#include "impartial/linear_extension.hpp"
#include "impartial/numeric.hpp"
#include "impartial/probe.hpp"
#include "impartial/structure.hpp"
#include "impartial/subgraph.hpp"
#include "impartial/tournament.hpp"
#include "impartial/tourneyon.hpp"
#include "impartial/tree_code.hpp"
