#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace treeline {

// Deterministic random source.  Seed mapping version 1:
//   - engine is std::mt19937_64 seeded directly with the user seed, so the
//     raw word stream is bit-identical on every conforming platform;
//   - uniform_below(b) draws 64-bit words, masks to the smallest power of
//     two covering b, and rejects out-of-range values (never modulo bias);
//     uniform_below(1) consumes nothing;
//   - shuffle is Fisher-Yates from the back: i = k-1..1, j = uniform_below(i+1).
// Changing any of this changes every seed->arrangement golden and requires a
// new mapping version.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t value = engine_() & mask;
            if (value < bound) return value;
        }
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace treeline
