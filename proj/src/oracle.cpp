#include "idcopt/oracle.hpp"

#include <string>

#include "idcopt/errors.hpp"

namespace idcopt {

namespace {

struct Best {
  double cost;
  std::size_t index;
  std::size_t count;
};

// Lower cost wins, equal cost goes to the lower index.
void fold(Best& acc, double cost, std::size_t index) {
  if (cost < acc.cost) {
    acc = {cost, index, 1};
  } else if (cost == acc.cost) {
    ++acc.count;
    if (index < acc.index) acc.index = index;
  }
}

void merge(Best& acc, const Best& other) {
  if (other.count == 0) return;
  if (acc.count == 0 || other.cost < acc.cost) {
    acc = other;
  } else if (other.cost == acc.cost) {
    acc.count += other.count;
    if (other.index < acc.index) acc.index = other.index;
  }
}

Best search_serial(const Objective& obj, std::size_t dim, std::size_t total) {
  Best best{0.0, 0, 0};
  for (std::size_t i = 0; i < total; ++i) {
    const double c = obj.cost(Genome::from_index(i, dim));
    if (best.count == 0) {
      best = {c, i, 1};
    } else {
      fold(best, c, i);
    }
  }
  return best;
}

#if IDCOPT_OPENMP
Best search_parallel(const Objective& obj, std::size_t dim, std::size_t total) {
  Best best{0.0, 0, 0};
  const auto n = static_cast<long long>(total);
#pragma omp parallel
  {
    Best local{0.0, 0, 0};
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const double c = obj.cost(Genome::from_index(idx, dim));
      if (local.count == 0) {
        local = {c, idx, 1};
      } else {
        fold(local, c, idx);
      }
    }
#pragma omp critical(idcopt_oracle_merge)
    merge(best, local);
  }
  return best;
}
#endif

}  // namespace

OracleResult oracle_bruteforce(const Objective& objective, Exec exec) {
  const std::size_t dim = objective.dimension();
  if (dim == 0) throw DomainError("oracle_bruteforce: dimension must be positive");
  if (dim > kOracleMaxDimension) {
    throw DomainError("oracle_bruteforce: refusing to enumerate 2^" + std::to_string(dim) +
                      " genomes (limit is D <= " + std::to_string(kOracleMaxDimension) + ")");
  }
  const std::size_t total = std::size_t{1} << dim;
  Best best{};
#if IDCOPT_OPENMP
  if (exec == Exec::parallel && objective.concurrent_safe()) {
    best = search_parallel(objective, dim, total);
  } else {
    best = search_serial(objective, dim, total);
  }
#else
  (void)exec;
  best = search_serial(objective, dim, total);
#endif
  return {Genome::from_index(best.index, dim), best.cost, total, best.count};
}

}  // namespace idcopt
