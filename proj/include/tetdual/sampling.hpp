#pragma once

#include <random>

#include "tetdual/chains.hpp"
#include "tetdual/covering.hpp"

namespace tetdual {

/// Each simplex of dimension `dim` is included independently with probability p.
Chain random_chain(const Complex3& c, int dim, std::mt19937_64& rng, double p = 0.1);

/// A random Z2 combination of the basis representatives plus the boundary
/// of a random (m+1)-chain.
Chain random_cycle(const Complex3& c, const HomologyBasis& basis, std::mt19937_64& rng, double p = 0.1);

/// A random walk of `steps` edges starting at `start`.
Walk random_walk(const Complex3& c, VertexId start, std::size_t steps, std::mt19937_64& rng);

} // namespace tetdual
