#pragma once

// Seeded randomized validation of every inequality the library implements.
//
// Trial t draws its matrix from a generator seeded by splitmix64(seed, t):
// the order is uniform in [dim_min, dim_max] and real and imaginary parts of
// each entry are independent uniforms on [-1, 1]. A failure is therefore
// reproducible from (seed, trial) alone.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "nrb/linalg.hpp"

namespace nrb::verify {

struct VerifyConfig {
  int trials = 200;
  int dim_min = 2;
  int dim_max = 6;
  std::uint64_t seed = 42;
  double tol = 1e-8;

  /// Throws DomainError unless trials >= 1 and 2 <= dim_min <= dim_max.
  void validate() const;
};

struct CheckStats {
  std::string name;
  long passed = 0;
  long failed = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
};

struct VerifyOutcome {
  std::vector<CheckStats> checks;
  bool ok() const;
};

/// Deterministic 64-bit generator (splitmix64) with a [-1, 1] uniform draw that
/// does not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform_pm1();
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
};

std::uint64_t trial_seed(std::uint64_t seed, int trial);
ComplexMatrix<double> random_matrix(int n, Rng& rng);
ComplexVector<double> random_vector(int n, Rng& rng);

/// Runs all trials; violations are written to `log` as they occur and the
/// summary table afterwards.
VerifyOutcome run_verify(const VerifyConfig& config, std::ostream& log);

}  // namespace nrb::verify
