#pragma once

#include <span>
#include <vector>

namespace idcopt {

/// Mean Euclidean distance from each position to `best`, divided by sqrt(D),
/// so the result lies in [0, 1] for coordinates in [0, 1].
/// Throws DomainError for an empty swarm or mismatched dimensions.
double swarm_diversity(std::span<const std::vector<double>> positions, std::span<const double> best);

}  // namespace idcopt
