#include "symtoep/norm.hpp"

#include "symtoep/error.hpp"

namespace symtoep {

double norm_estimate(const MatrixWindow& m, int iterations, std::uint64_t seed) {
  if (iterations < 1) throw DomainError("norm_estimate: iterations must be >= 1");
  return power_norm(m.to_sparse(), iterations, seed);
}

}  // namespace symtoep
