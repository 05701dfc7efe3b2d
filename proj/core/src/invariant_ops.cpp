#include "fll/invariant_ops.hpp"

namespace fll {

std::optional<Rational> collinearity_factor(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::size_t pivot = x.size();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == x.size()) return std::nullopt;  // x = 0: no factor
  const Rational k = y[pivot] / x[pivot];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != k * x[i]) return std::nullopt;
  return k;
}

}  // namespace fll
