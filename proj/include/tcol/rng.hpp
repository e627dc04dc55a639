#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tcol {

// mt19937_64 with hand-rolled bounded draws. std::uniform_int_distribution and
// std::shuffle are implementation-defined, which would break reproducibility of
// seeded runs across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            const std::uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[next_below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tcol
