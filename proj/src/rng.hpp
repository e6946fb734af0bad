#pragma once

#include <cstdint>
#include <random>

namespace zetafree {

// Standard splitmix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for chain i of a multi-chain run: splitmix64 applied to
// master + (i+1) * golden-ratio increment.  Pure in (master, i), so runs
// are reproducible for any chain count and order of execution.
inline std::uint64_t chain_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// mt19937_64 wrapped so all variate derivations go through 53-bit uniforms;
// no library distributions, so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1) with 53 random bits
  double uniform53() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform53(); }

  // uniform in {lo, ..., hi}
  int uniform_int(int lo, int hi) {
    int span = hi - lo + 1;
    int v = lo + static_cast<int>(uniform53() * span);
    return v > hi ? hi : v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace zetafree
