#pragma once

namespace specreg {

// Gaussian-family kernels of order 2 and 4. The order-2 kernel is the
// standard normal density; the order-4 kernel is (1/2)(3 - u^2) phi(u),
// which integrates to 1 and has vanishing first three moments.
struct KernelSpec {
  int order = 2;  // 2 or 4
};

double kernel_eval(const KernelSpec& spec, double u);

// Self-convolution (K * K)(u) in closed form. For order 2 this is the N(0,2)
// density; for order 4 it is exp(-u^2/4) (u^4/16 - 7u^2/4 + 27/4) / (8 sqrt(pi)).
double kernel_selfconv(const KernelSpec& spec, double u);

void validate(const KernelSpec& spec);

}  // namespace specreg
