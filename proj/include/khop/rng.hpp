#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace khop {

// Deterministic RNG wrapper. std::uniform_int_distribution and friends are
// implementation-defined, so all draws go through our own reductions to keep
// event logs byte-identical across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). bound must be > 0.
    uint64_t below(uint64_t bound) {
        // Rejection sampling to avoid modulo bias.
        const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
        uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(below(v.size()))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

// Named sub-streams derived from one master seed. Topology generation, fault
// sampling and protocol choices must not perturb each other, otherwise paired
// runs (with/without faults) stop being comparable.
struct RngStreams {
    static constexpr uint64_t kTopologyOffset = 0x9e3779b97f4a7c15ull;
    static constexpr uint64_t kFaultOffset = 0xbf58476d1ce4e5b9ull;
    static constexpr uint64_t kProtocolOffset = 0x94d049bb133111ebull;

    static Rng topology(uint64_t master) { return Rng(master ^ kTopologyOffset); }
    static Rng fault(uint64_t master) { return Rng(master ^ kFaultOffset); }
    static Rng protocol(uint64_t master) { return Rng(master ^ kProtocolOffset); }
};

// Stable mix for deriving per-cell seeds in sweeps (splitmix64 finalizer).
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace khop
