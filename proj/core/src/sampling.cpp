#include "conewave/sampling.hpp"

#include <cmath>
#include <thread>

#include "conewave/errors.hpp"

namespace conewave {

namespace {

// Direction-number seeds (s, a, m...) for Sobol dims 2 and 3; dim 1 is the
// van der Corput sequence. Standard Joe–Kuo values.
struct DimSeed {
    int s;
    std::uint32_t a;
    std::uint32_t m[2];
};
constexpr DimSeed kSeeds[2] = {
    {1, 0, {1, 0}},
    {2, 1, {1, 3}},
};

}  // namespace

Sobol3::Sobol3(int dim) : dim_(dim) {
    if (dim < 1 || dim > 3) throw UsageError("Sobol3: dim must be 1..3");
    // dim 0: v_k = 2^(31-k)
    for (int k = 0; k < 32; ++k) dirs_[0][k] = 1u << (31 - k);
    for (int d = 1; d < 3; ++d) {
        const DimSeed& sd = kSeeds[d - 1];
        const int s = sd.s;
        for (int k = 0; k < s; ++k) dirs_[d][k] = sd.m[k] << (31 - k);
        for (int k = s; k < 32; ++k) {
            std::uint32_t v = dirs_[d][k - s] ^ (dirs_[d][k - s] >> s);
            for (int i = 1; i < s; ++i)
                v ^= ((sd.a >> (s - 1 - i)) & 1u) * dirs_[d][k - i];
            dirs_[d][k] = v;
        }
    }
}

std::array<double, 3> Sobol3::next() {
    // Gray-code increment: flip the direction of the lowest zero bit of index.
    std::uint64_t c = 0;
    std::uint64_t value = index_;
    while (value & 1u) {
        value >>= 1;
        ++c;
    }
    ++index_;
    std::array<double, 3> out{};
    for (int d = 0; d < dim_; ++d) {
        state_[d] ^= dirs_[d][c];
        out[d] = static_cast<double>(state_[d]) * 0x1p-32;
    }
    return out;
}

std::vector<std::array<double, 3>> Sobol3::box(std::size_t n, double lo, double hi) {
    std::vector<std::array<double, 3>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto u = next();
        for (int d = 0; d < dim_; ++d) u[d] = lo + (hi - lo) * u[d];
        pts.push_back(u);
    }
    return pts;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads < 1) threads = 1;
    const std::size_t nt = std::min<std::size_t>(threads, n == 0 ? 1 : n);
    if (nt <= 1 || n == 0) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace conewave
