#include "idcopt/diversity.hpp"

#include <cmath>

#include "idcopt/errors.hpp"

namespace idcopt {

double swarm_diversity(std::span<const std::vector<double>> positions,
                       std::span<const double> best) {
  if (positions.empty()) throw DomainError("swarm_diversity: empty swarm");
  if (best.empty()) throw DomainError("swarm_diversity: zero-dimensional positions");
  double total = 0.0;
  for (const auto& x : positions) {
    if (x.size() != best.size()) throw DomainError("swarm_diversity: dimension mismatch");
    double sq = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double diff = x[d] - best[d];
      sq += diff * diff;
    }
    total += std::sqrt(sq);
  }
  return total / static_cast<double>(positions.size()) /
         std::sqrt(static_cast<double>(best.size()));
}

}  // namespace idcopt
