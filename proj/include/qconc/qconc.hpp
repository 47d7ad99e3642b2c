#pragma once

// Umbrella header: concurrence lower bounds for multipartite mixed states
// from partial-transpose/realignment trace norms and sub-state projections.

#include "qconc/bounds.hpp"
#include "qconc/common.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/io.hpp"
#include "qconc/random.hpp"
#include "qconc/selectors.hpp"
#include "qconc/states.hpp"
#include "qconc/sweep.hpp"
#include "qconc/system_dims.hpp"
#include "qconc/tensor_ops.hpp"
#include "qconc/verify.hpp"
