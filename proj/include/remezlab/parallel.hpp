#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace remezlab {

// SplitMix64 step; used to derive independent per-task seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for task `index` under `master`. Stable across platforms and runs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Worker count: REMEZLAB_THREADS caps parallelism, 0 or unset means auto.
unsigned thread_budget();

// Runs task(0..count-1) on up to thread_budget() threads. Tasks must be
// independent; callers make results schedule-independent by writing into
// per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

// Deterministic double generator built on mt19937_64 with an explicit
// uniform mapping, so sequences do not depend on the standard library's
// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller (two uniforms per call).
  double gauss();
  // Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 eng_;
};

}  // namespace remezlab
