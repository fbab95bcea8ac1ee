#ifndef BMFRENET_VERIFY_HPP
#define BMFRENET_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bmfrenet {

struct VerifyCheck {
  std::string name;
  double max_residual;
  double tol;  // effective pass threshold for this check
  bool passed;
};

struct VerifyReport {
  std::uint64_t seed;
  double base_tol;
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
};

/// Runs every invariant suite over seeded random grids. Checks whose
/// documented tolerance is coarser than the default (the exponential branch
/// seam) scale the base tolerance by a fixed factor.
VerifyReport run_verify(std::uint64_t seed, double base_tol);

}  // namespace bmfrenet

#endif
