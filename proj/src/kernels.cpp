#include "specreg/kernels.hpp"

#include <cmath>
#include <numbers>

#include "specreg/errors.hpp"

namespace specreg {

namespace {
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
}  // namespace

void validate(const KernelSpec& spec) {
  if (spec.order != 2 && spec.order != 4) {
    throw DataError("kernel order must be 2 or 4");
  }
}

double kernel_eval(const KernelSpec& spec, double u) {
  validate(spec);
  const double phi = kInvSqrt2Pi * std::exp(-0.5 * u * u);
  if (spec.order == 2) return phi;
  return 0.5 * (3.0 - u * u) * phi;
}

double kernel_selfconv(const KernelSpec& spec, double u) {
  validate(spec);
  const double e = std::exp(-0.25 * u * u);
  if (spec.order == 2) return 0.5 * kInvSqrtPi * e;
  const double m = 0.25 * u * u;
  return 0.125 * kInvSqrtPi * e * (m * m - 7.0 * m + 6.75);
}

}  // namespace specreg
