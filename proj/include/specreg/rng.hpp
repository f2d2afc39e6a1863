#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace specreg {

// Identifies one reproducible random stream. Identical (base_seed, stream_id)
// pairs yield bit-identical draws across runs and across parallel schedules;
// Monte Carlo replication r runs on stream_id = r.
struct SeedSpec {
  std::uint64_t base_seed = 0;
  std::uint64_t stream_id = 0;
};

// SplitMix64 finalizer, used to hash seeds into engine states.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream for a sub-purpose (fold splitting, pilot
// draws, ...) without disturbing the parent stream.
SeedSpec derive_stream(const SeedSpec& s, std::uint64_t purpose);

// Deterministic random stream. The engine is a mt19937_64 whose state is
// fully specified by the standard, so draws are reproducible across
// platforms; all transforms below avoid std::*_distribution for the same
// reason.
class RandomStream {
 public:
  explicit RandomStream(const SeedSpec& seed);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0, 1), never returning an exact endpoint.
  double uniform();

  // Standard normal via Box-Muller.
  double normal();

  double logistic(double location, double scale);

  std::vector<double> normal_vector(std::size_t n);

  // Fisher-Yates shuffle of [0, n).
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Balanced random partition of [0, n) into k folds. Fold sizes differ by at
// most one and depend only on (n, k); which rows land where depends on the
// seed. 2 <= k <= n required.
struct FoldAssignment {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;  // fold index per row, in [0, k)

  std::vector<std::size_t> fold_sizes() const;
};

FoldAssignment make_folds(std::size_t n, std::size_t k, const SeedSpec& seed);

}  // namespace specreg
