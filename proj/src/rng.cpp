#include "specreg/rng.hpp"

#include <cmath>
#include <numbers>

#include "specreg/errors.hpp"

namespace specreg {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeedSpec derive_stream(const SeedSpec& s, std::uint64_t purpose) {
  return SeedSpec{mix64(s.base_seed ^ mix64(purpose)), s.stream_id};
}

RandomStream::RandomStream(const SeedSpec& seed)
    : engine_(mix64(mix64(seed.base_seed) ^ mix64(seed.stream_id + 0x51ed270b0a5f61c5ULL))) {}

double RandomStream::uniform() {
  // 53-bit mantissa, shifted into (0, 1).
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u == 0.0 ? 0x1.0p-53 : u;
}

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

double RandomStream::logistic(double location, double scale) {
  const double u = uniform();
  return location + scale * std::log(u / (1.0 - u));
}

std::vector<double> RandomStream::normal_vector(std::size_t n) {
  std::vector<double> out(n);
  for (auto& x : out) x = normal();
  return out;
}

std::vector<std::size_t> RandomStream::permutation(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_u64() % i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (const auto f : assignment) ++sizes[f];
  return sizes;
}

FoldAssignment make_folds(std::size_t n, std::size_t k, const SeedSpec& seed) {
  if (k < 2) throw DataError("make_folds: k must be at least 2");
  if (k > n) throw DataError("make_folds: k exceeds the number of rows");
  RandomStream rng(seed);
  const auto order = rng.permutation(n);
  FoldAssignment folds;
  folds.k = k;
  folds.assignment.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    folds.assignment[order[pos]] = pos % k;
  }
  return folds;
}

}  // namespace specreg
