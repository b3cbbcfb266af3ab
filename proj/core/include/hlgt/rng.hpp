#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace hlgt {

/// Seeded RNG with hand-rolled distributions. std::uniform_*_distribution output
/// is implementation-defined, so drawing directly from the engine keeps corpora
/// and parameter initialization reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool next_bool() { return (engine_() & 1u) != 0; }

    /// Derives an independent stream; used to give each subsystem its own RNG.
    Rng split(std::uint64_t stream) {
        return Rng(engine_() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    std::string state_string() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    void restore_state(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hlgt
