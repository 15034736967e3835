#ifndef LATTICEPLAN_RANDOM_HPP
#define LATTICEPLAN_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace latticeplan {

/// Source of uniform draws in [0, 1). Everything stochastic in the library
/// (path sampling, optimizer moves) pulls from one of these, so a run is a
/// pure function of its seeds.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual double next_uniform() = 0;

    /// Integer in [0, k), k >= 1.
    int next_below(int k)
    {
        int v = static_cast<int>(next_uniform() * k);
        return v < k ? v : k - 1;
    }

    /// Normal draw via Box-Muller; consumes two uniforms.
    double next_normal(double mean, double stddev)
    {
        double u1 = 1.0 - next_uniform(); // (0, 1]
        double u2 = next_uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        return mean + stddev * z;
    }
};

/// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Substream `index` of root seed `root`. Fixed assignment, so callers that
/// split a root (e.g. above/below generation) are order-independent.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index)
{
    return mix_seed(root ^ mix_seed(index + 1));
}

/// Seeded stream. The uniform is built from the top 53 bits of a
/// mersenne-twister word, so sequences are bit-identical across platforms.
class RandomStream final : public RandomSource {
public:
    explicit RandomStream(std::uint64_t seed)
        : engine_(seed)
    {
    }

    double next_uniform() override
    {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

private:
    std::mt19937_64 engine_;
};

/// Degenerate source returning a fixed value; pins the r of the sampling
/// rule for deterministic boundary checks.
class ConstantSource final : public RandomSource {
public:
    explicit ConstantSource(double value)
        : value_(value)
    {
    }

    double next_uniform() override { return value_; }

private:
    double value_;
};

} // namespace latticeplan

#endif
