#ifndef NCPARA_RNG_HPP
#define NCPARA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ncpara {

// Seeded RNG wrapper. All randomized steps in the toolkit draw from this so
// that a run is reproducible from its seed alone; the helpers below avoid
// std::*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    std::size_t i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ncpara

#endif
