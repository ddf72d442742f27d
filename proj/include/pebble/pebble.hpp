#pragma once

#include "pebble/graph.hpp"
#include "pebble/symmetry.hpp"
#include "pebble/distribution.hpp"
#include "pebble/solver.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/parallel.hpp"
#include "pebble/number.hpp"
#include "pebble/formulas.hpp"
#include "pebble/properties.hpp"
#include "pebble/harness.hpp"
#include "pebble/expr.hpp"
