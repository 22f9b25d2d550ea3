#include "idcopt/parallel.hpp"

#if defined(IDCOPT_OPENMP)
#include <omp.h>
#endif

namespace idcopt {

#if defined(IDCOPT_OPENMP)
int max_threads() { return omp_get_max_threads(); }
void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}
bool openmp_enabled() { return true; }
#else
int max_threads() { return 1; }
void set_threads(int) {}
bool openmp_enabled() { return false; }
#endif

}  // namespace idcopt
