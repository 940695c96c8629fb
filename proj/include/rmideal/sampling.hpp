#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"

namespace rmideal {

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** whose state is a pure function of (seed, stream).
///
/// Every Monte Carlo trial owns stream = trial_index, so a trial's graph does
/// not depend on which worker ran it or in what order.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream) noexcept {
        std::uint64_t mix = seed;
        const std::uint64_t key = splitmix64(mix);
        std::uint64_t s = key ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
        splitmix64(s);  // decorrelate neighbouring streams
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0,1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4]{};
};

struct SampleSpec {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
};

inline void check_probability(double p, const char* what = "p") {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0,1], got " + std::to_string(p));
}

/// G(n,p): pairs (u,v), u<v, visited in lexicographic order, one uniform draw
/// each; the pair is an edge iff the draw is below p.
inline Graph sample_er(const SampleSpec& spec) {
    check_probability(spec.p);
    Graph g(spec.n);
    TrialRng rng(spec.seed, spec.trial_index);
    for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
            if (rng.uniform() < spec.p) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace rmideal
