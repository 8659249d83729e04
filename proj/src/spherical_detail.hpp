#pragma once

#include <span>
#include <vector>

#include "hyperharm/specfun.hpp"

namespace hyperharm::detail {

/// allow_expansion=false forces series + ODE continuation over the whole range.
std::vector<cplx> spherical_row(cplx lambda, std::span<const double> radii, const Geometry& g,
                                bool allow_expansion);

}  // namespace hyperharm::detail
