#pragma once

#include <ramgirth/graph.hpp>
#include <ramgirth/prng.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace ramgirth {

/// G(n, p): pairs (u, v), u < v, visited in lexicographic order, each kept
/// iff the next uniform is below p.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);
Graph sample_gnp(std::size_t n, double p, Prng & rng);

/// [N]_p: each of 1..N kept independently, ascending.
std::vector<std::int64_t> sample_subset(std::int64_t n, double p, std::uint64_t seed);

struct RejectionResult
{
    std::optional<Graph> graph;  // first sample with girth >= k
    std::uint64_t tries = 0;
    /// successes / tries; 1/tries on success, 0 on failure
    double success_rate = 0.0;
};

/// Draws G(n, p) from one stream until the girth reaches k, at most
/// max_tries times. Requires k >= 4.
RejectionResult rejection_sample_girth(std::size_t n, double p, std::size_t k, std::uint64_t seed,
                                       std::uint64_t max_tries);

/// Fraction of `samples` independent draws (seeds seed, seed+1, ...) whose
/// girth is at least k.
double girth_success_rate(std::size_t n, double p, std::size_t k, std::uint64_t seed, std::uint64_t samples);

} // namespace ramgirth
