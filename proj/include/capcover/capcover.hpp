#pragma once

#include "capcover/bounds.hpp"
#include "capcover/coverage.hpp"
#include "capcover/densities.hpp"
#include "capcover/geometry.hpp"
#include "capcover/mc.hpp"
#include "capcover/min_cap.hpp"
#include "capcover/quadrature.hpp"
#include "capcover/radius_dist.hpp"
#include "capcover/rng.hpp"
