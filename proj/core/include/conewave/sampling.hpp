#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace conewave {

/// Sobol sequence in up to 3 dimensions (direction numbers hardcoded for
/// the first three dims). Deterministic; skips the all-zero first point.
class Sobol3 {
  public:
    explicit Sobol3(int dim);

    std::array<double, 3> next();

    /// n points mapped to [lo, hi]^dim.
    std::vector<std::array<double, 3>> box(std::size_t n, double lo, double hi);

  private:
    int dim_;
    std::uint64_t index_ = 0;
    std::array<std::uint32_t, 3> state_{};
    std::array<std::array<std::uint32_t, 32>, 3> dirs_{};
};

/// Deterministic parallel-for helper. Splits [0, n) into contiguous chunks,
/// one thread per chunk; results must go to disjoint slots.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace conewave
