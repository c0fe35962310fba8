#ifndef VIEWSEL_RNG_HPP
#define VIEWSEL_RNG_HPP

#include <cstdint>

namespace viewsel {

// SplitMix64 generator. Used instead of <random> engines+distributions so
// that simulation output is bit-identical across standard library
// implementations, and so that per-trial streams can be derived from
// (seed, trial_index) for order-independent parallel execution.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

private:
    std::uint64_t state_;
};

// Stream for one trial; decorrelates seed and index before mixing.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    SplitMix64 mixer(seed ^ (trial_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mixer.next());
}

} // namespace viewsel

#endif
