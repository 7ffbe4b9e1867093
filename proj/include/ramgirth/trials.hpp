#pragma once

#include <ramgirth/colouring.hpp>
#include <ramgirth/params.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramgirth {

/// A desk-scale instance of one construction, repeated `trials` times.
///
/// p is given directly or as p = scale * n^{-a}, with the exponent a of the
/// construction: (k-2)/(k-1) for cycles, 1/(k-1) for ap, 2/(k+1) for
/// cliques. Trial i uses seed + i.
struct TrialConfig
{
    Theorem theorem = Theorem::ap;
    std::uint64_t n = 0;
    std::optional<double> p;
    std::optional<double> scale;
    unsigned k = 3;
    unsigned g = 4;
    unsigned r = 2;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    SearchBudget budget{1000000, std::nullopt};
    /// Deletion cap; defaults to floor(0.1 p n) for ap and
    /// floor(0.1 p C(n,2)) for cliques.
    std::optional<std::uint64_t> cap;
    /// Draws per trial for the cycles construction.
    std::uint64_t max_tries = 1000;
    unsigned threads = 1;
    /// Adds wall-clock milliseconds to each record (breaks byte equality).
    bool timing = false;

    double resolved_p() const;
    std::uint64_t resolved_cap() const;
    void validate() const;
};

struct TrialRecord
{
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> error;

    /// |[n]_p| for ap, e(G) for the graph constructions.
    std::uint64_t object_size = 0;
    /// Hyperedges of the system of copies (k-cycles, K_k's or AP_k's).
    std::uint64_t copies = 0;
    /// Short cycle counts X_j. For cycles these are the j-cycles (j < k) of
    /// the first draw.
    std::map<std::size_t, std::uint64_t> counts;

    /// Draws used by the cycles construction.
    std::uint64_t tries = 0;
    bool cap_exceeded = false;
    std::uint64_t removed = 0;
    /// Girth target met: after deletion (ap, cliques) or by rejection (cycles).
    bool girth_ok = false;

    std::optional<SearchStatus> colouring;
    std::uint64_t nodes = 0;
    std::optional<double> wall_ms;
};

struct TrialSummary
{
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    std::uint64_t successes = 0;
    double success_rate = 0.0;
    double mean_object_size = 0.0;
    double mean_removed = 0.0;
    std::map<std::size_t, double> mean_counts;
    std::map<std::string, std::uint64_t> colouring;
};

/// Runs every trial, in parallel over config.threads workers; the result is
/// ordered by trial index and independent of the thread count.
std::vector<TrialRecord> run_trials(const TrialConfig & config);

TrialRecord run_trial(const TrialConfig & config, std::uint64_t index);

TrialSummary summarize(const std::vector<TrialRecord> & records);

} // namespace ramgirth
