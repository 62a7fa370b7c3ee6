#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

// Seeded draws that produce identical streams on every standard library.
// std::mt19937_64's output sequence is fixed by the standard; the
// distribution adaptors in <random> are not, so they are avoided here.
namespace frecency::rng {

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

// Uniform integer in [0, n) by rejection sampling. n must be > 0.
inline std::uint64_t uniform_index(Engine& engine, std::uint64_t n) {
    const std::uint64_t limit = Engine::max() - (Engine::max() % n);
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    return draw % n;
}

// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Engine& engine, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(engine);
}

template <typename T>
void shuffle(std::span<T> items, Engine& engine) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_index(engine, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace frecency::rng
