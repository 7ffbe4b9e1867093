#include "oracles.hpp"

#include <ramgirth/copies.hpp>
#include <ramgirth/deletion.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/girth.hpp>
#include <ramgirth/json_io.hpp>
#include <ramgirth/sampling.hpp>
#include <ramgirth/trials.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ramgirth;

TEST_CASE("the generator is the pinned 64-bit Mersenne twister")
{
    Prng a(5489);
    // 10000th output of mt19937_64 with the default seed, fixed by the standard
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = a.next();
    CHECK(x == 9981545732273789042ULL);
    Prng b(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = b.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("G(n,p) sampling")
{
    CHECK(sample_gnp(12, 0.0, 3).size() == 0);
    CHECK(sample_gnp(12, 1.0, 3) == complete_graph(12));
    CHECK(sample_gnp(40, 0.3, 99) == sample_gnp(40, 0.3, 99));
    CHECK(sample_gnp(40, 0.3, 99) != sample_gnp(40, 0.3, 100));

    const int samples = 10000;
    double sum = 0;
    for (int s = 0; s < samples; ++s)
        sum += static_cast<double>(sample_gnp(30, 0.1, static_cast<std::uint64_t>(s)).size());
    const double mean = sum / samples;
    const double se = std::sqrt(435 * 0.1 * 0.9 / samples);
    CHECK(std::abs(mean - 43.5) < 3 * se);
}

TEST_CASE("[N]_p sampling")
{
    CHECK(sample_subset(50, 0.0, 1).empty());
    CHECK(sample_subset(50, 1.0, 1).size() == 50);
    auto s = sample_subset(50, 1.0, 1);
    CHECK(s.front() == 1);
    CHECK(s.back() == 50);

    const int samples = 10000;
    double sum = 0;
    for (int i = 0; i < samples; ++i)
        sum += static_cast<double>(sample_subset(1000, 0.05, static_cast<std::uint64_t>(i)).size());
    const double se = std::sqrt(1000 * 0.05 * 0.95 / samples);
    CHECK(std::abs(sum / samples - 50) < 3 * se);
}

TEST_CASE("rejection sampling for girth")
{
    RejectionResult empty = rejection_sample_girth(20, 0.0, 5, 1, 1);
    REQUIRE(empty.graph);
    CHECK(empty.tries == 1);

    RejectionResult sparse = rejection_sample_girth(50, 0.02, 5, 4, 10000);
    REQUIRE(sparse.graph);
    CHECK((! graph_girth(*sparse.graph) || *graph_girth(*sparse.graph) >= 5));

    RejectionResult k5 = rejection_sample_girth(5, 1.0, 4, 1, 10);
    CHECK(! k5.graph);
    CHECK(k5.tries == 10);
    CHECK(k5.success_rate == 0.0);
    CHECK_THROWS_AS(rejection_sample_girth(5, 0.5, 3, 1, 10), InputError);
}

TEST_CASE("deletion of short cycles")
{
    UniformHypergraph clean(3, 7, {{0, 1, 2}, {2, 3, 4}});
    DeletionResult none = delete_short_cycles(clean, 3, 0);
    CHECK(! none.cap_exceeded);
    CHECK(none.removed.empty());
    CHECK(none.survivor == clean);

    UniformHypergraph two(3, 6, {{0, 1, 2}, {0, 2, 4}});
    DeletionResult one = delete_short_cycles(two, 3, 1);
    CHECK(! one.cap_exceeded);
    CHECK(one.removed == std::vector<Vertex>{0});
    CHECK(one.counts.at(2) == 1);
    CHECK(enumerate_short_cycles(one.survivor, 3).empty());

    DeletionResult capped = delete_short_cycles(two, 3, 0);
    CHECK(capped.cap_exceeded);
    CHECK(capped.removed.empty());

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        UniformHypergraph h = oracle::random_hypergraph(rng, 12, 8, 3);
        DeletionResult d = delete_short_cycles(h, 4, 100);
        REQUIRE(! d.cap_exceeded);
        CHECK(sparsity_girth(d.survivor, 4).satisfied);
        CHECK(oracle::sparsity(d.survivor, 4).satisfied);
    }
}

TEST_CASE("trial runner")
{
    TrialConfig c;
    c.theorem = Theorem::ap;
    c.n = 2000;
    c.scale = 0.5;
    c.k = 3;
    c.g = 4;
    c.trials = 6;
    c.seed = 7;
    c.validate();
    CHECK(c.resolved_p() == doctest::Approx(0.5 / std::sqrt(2000.0)));
    CHECK(c.resolved_cap() == static_cast<std::uint64_t>(0.1 * c.resolved_p() * 2000));

    auto one = run_trials(c);
    c.threads = 3;
    auto three = run_trials(c);
    REQUIRE(one.size() == 6);
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].seed == 7 + i);
        CHECK(trial_record_json(c, one[i]) == trial_record_json(c, three[i]));
    }
    TrialSummary s = summarize(one);
    CHECK(s.trials == 6);

    c.trials = 0;
    CHECK(run_trials(c).empty());
    CHECK(summarize({}).trials == 0);

    TrialConfig cycles;
    cycles.theorem = Theorem::cycles;
    cycles.n = 40;
    cycles.p = 0.02;
    cycles.k = 5;
    cycles.trials = 3;
    for (const auto & r : run_trials(cycles)) {
        CHECK(! r.error);
        CHECK(r.girth_ok);
        CHECK(r.tries >= 1);
    }

    TrialConfig cliques;
    cliques.theorem = Theorem::cliques;
    cliques.n = 30;
    cliques.scale = 1.0;
    cliques.k = 3;
    cliques.g = 3;
    cliques.trials = 2;
    for (const auto & r : run_trials(cliques))
        CHECK(! r.error);

    TrialConfig bad = c;
    bad.p = 1.5;
    CHECK_THROWS_AS(bad.validate(), InputError);
}
