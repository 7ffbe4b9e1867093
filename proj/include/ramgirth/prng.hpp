#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ramgirth {

/// Name and version of the generator; embedded in every experiment record.
inline constexpr std::string_view prng_algorithm = "mt19937_64+u53/v1";

/// Seeded stream with a pinned algorithm: std::mt19937_64 (fully specified
/// by the standard), uniforms from the top 53 bits. No platform-dependent
/// distribution objects are involved, so streams match across toolchains.
class Prng
{
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace ramgirth
