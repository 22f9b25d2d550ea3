#pragma once

namespace idcopt {

/// Kernel execution policy. `serial` is the reference path every parallel
/// kernel is tested against; both must produce identical results.
enum class Exec { serial, parallel };

/// Worker threads available to OpenMP kernels (1 when built without OpenMP).
int max_threads();
/// Caps OpenMP worker threads; <= 0 leaves the runtime default.
void set_threads(int n);
bool openmp_enabled();

}  // namespace idcopt
