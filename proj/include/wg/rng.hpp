#pragma once

#include "wg/rational.hpp"

#include <cstdint>
#include <random>

namespace wg {

// Deterministic cross-platform RNG. The generator is std::mt19937_64, whose
// output sequence is fully pinned by the standard; we never use the standard
// library distributions (their mapping is implementation-defined) and instead
// draw raw 64-bit words with explicit rejection sampling. Independent streams
// are derived from (seed, stream index) with splitmix64 so that parallel runs
// never share state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform draw on {0, ..., bound-1} by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform draw on {0, ..., bound-1} for arbitrary-precision bound > 0.
    // Draws ceil(bits/64) words, keeps the low `bits` bits and rejects values
    // >= bound, so the result is exactly uniform.
    Int below_big(const Int &bound) {
        size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        const Int mask = (Int(1) << bits) - 1;
        for (;;) {
            Int r = 0;
            for (size_t w = 0; w < words; ++w) {
                std::uint64_t word = gen_();
                r <<= 64;
                Int chunk;
                mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
                r |= chunk;
            }
            r &= mask;
            if (r < bound)
                return r;
        }
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace wg
