#pragma once
// Umbrella header.

#include "sgt/error.hpp"
#include "sgt/formulas.hpp"
#include "sgt/graph.hpp"
#include "sgt/io.hpp"
#include "sgt/metric.hpp"
#include "sgt/nonlinear_gap.hpp"
#include "sgt/path_method.hpp"
#include "sgt/prng.hpp"
#include "sgt/rational.hpp"
#include "sgt/report.hpp"
#include "sgt/spectrum.hpp"
#include "sgt/version.hpp"
