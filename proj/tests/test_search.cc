#include "oracles.hpp"

#include <ramgirth/copies.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/exact.hpp>

#include <doctest.h>

#include <random>

using namespace ramgirth;

TEST_CASE("colouring search examples")
{
    SearchResult one = colouring_search(UniformHypergraph(3, 3, {{0, 1, 2}}), 2);
    REQUIRE(one.status == SearchStatus::proper);
    CHECK(verify_colouring(UniformHypergraph(3, 3, {{0, 1, 2}}), *one.witness));

    CHECK(colouring_search(ap_system(9, 3), 2).status == SearchStatus::uncolourable);
    SearchResult eight = colouring_search(ap_system(8, 3), 2);
    REQUIRE(eight.status == SearchStatus::proper);
    CHECK(verify_colouring(ap_system(8, 3), *eight.witness));

    CHECK(colouring_search(UniformHypergraph(3, 0, {}), 1).status == SearchStatus::proper);
    CHECK(colouring_search(UniformHypergraph(3, 3, {{0, 1, 2}}), 1).status == SearchStatus::uncolourable);
}

TEST_CASE("colouring search honours its budget")
{
    SearchResult r = colouring_search(ap_system(30, 4), 2, SearchBudget{10, std::nullopt});
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(! r.witness);
    SearchResult t = colouring_search(ap_system(34, 4), 2, SearchBudget{std::nullopt, 0.0});
    CHECK(t.status != SearchStatus::uncolourable);
}

TEST_CASE("colouring search agrees with naive enumeration")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t h = 2 + trial % 3;
        UniformHypergraph hg = oracle::random_hypergraph(rng, 10, 14, h);
        const std::size_t r = 1 + rng() % 3;
        SearchResult res = colouring_search(hg, r);
        REQUIRE(res.status != SearchStatus::budget_exceeded);
        CHECK((res.status == SearchStatus::proper) == oracle::colourable(hg, r));
        if (res.witness) {
            CHECK(res.witness->colours == r);
            CHECK(oracle::proper(hg, res.witness->of));
        }
    }
    // denser instances where uncolourable answers are common
    for (int trial = 0; trial < 40; ++trial) {
        UniformHypergraph hg = oracle::random_hypergraph(rng, 7, 30, 2);
        SearchResult res = colouring_search(hg, 2);
        CHECK((res.status == SearchStatus::proper) == oracle::colourable(hg, 2));
    }
}

TEST_CASE("arrowing")
{
    CHECK(arrows(complete_graph(6), CopyKind::clique, 3, 2).verdict == ArrowVerdict::arrows);
    ArrowResult k5 = arrows(complete_graph(5), CopyKind::clique, 3, 2);
    REQUIRE(k5.verdict == ArrowVerdict::not_arrows);
    CHECK(verify_colouring(system_of_copies(CopyKind::clique, complete_graph(5), 3), *k5.witness));
    // the two colour classes are 5-cycles
    for (std::uint32_t colour : {1u, 2u}) {
        std::vector<std::pair<Vertex, Vertex>> cls;
        for (std::size_t e = 0; e < k5.witness->of.size(); ++e)
            if (k5.witness->of[e] == colour)
                cls.emplace_back(complete_graph(5).edge(static_cast<EdgeId>(e)).u,
                                 complete_graph(5).edge(static_cast<EdgeId>(e)).v);
        Graph g = graph_from_edges(5, cls);
        CHECK(g.size() == 5);
        CHECK(graph_girth(g) == 5u);
    }
    CHECK(arrows(cycle_graph(5), CopyKind::cycle, 5, 1).verdict == ArrowVerdict::arrows);
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK((arrows(complete_graph(n), CopyKind::clique, 4, 1).verdict == ArrowVerdict::arrows) == (n >= 4));
    CHECK(arrows_ap(9, 3, 2).verdict == ArrowVerdict::arrows);
}

TEST_CASE("Ramsey decisions and sweeps")
{
    CHECK(ramsey_decide(CopyKind::clique, 3, 2, 6).verdict == ArrowVerdict::arrows);
    CHECK(ramsey_decide(CopyKind::clique, 3, 2, 5).verdict == ArrowVerdict::not_arrows);
    CHECK(ramsey_decide(CopyKind::cycle, 4, 2, 6).verdict == ArrowVerdict::arrows);
    CHECK(ramsey_decide(CopyKind::cycle, 4, 2, 5).verdict == ArrowVerdict::not_arrows);
    CHECK_THROWS_AS(ramsey_decide(CopyKind::clique, 4, 2, 3), InputError);

    SweepResult k3 = ramsey_number(CopyKind::clique, 3, 2);
    CHECK(k3.value == 6u);
    CHECK(k3.lower_bound == 6u);
    CHECK(k3.witnesses.size() == 3);
    SweepResult c4 = ramsey_number(CopyKind::cycle, 4, 2);
    CHECK(c4.value == 6u);
    CHECK(ramsey_number(CopyKind::clique, 2, 3).value == 2u);

    SweepResult cut = ramsey_number(CopyKind::clique, 3, 3, SearchBudget{200, std::nullopt});
    CHECK(! cut.value);
    CHECK(cut.lower_bound >= 3);
}

TEST_CASE("van der Waerden decisions and sweeps")
{
    CHECK(vdw_decide(9, 3, 2).verdict == ArrowVerdict::arrows);
    ArrowResult eight = vdw_decide(8, 3, 2);
    REQUIRE(eight.verdict == ArrowVerdict::not_arrows);
    CHECK(verify_colouring(ap_system(8, 3), *eight.witness));
    CHECK(vdw_decide(5, 5, 1).verdict == ArrowVerdict::arrows);
    CHECK(vdw_decide(4, 5, 3).verdict == ArrowVerdict::not_arrows);

    CHECK(vdw_number(3, 2).value == 9u);
    CHECK(vdw_number(6, 1).value == 6u);
    SweepResult cut = vdw_number(4, 2, SearchBudget{50, std::nullopt});
    CHECK(! cut.value);
}

TEST_CASE("arrowing is monotone along the sweeps")
{
    for (std::size_t n = 6; n <= 7; ++n)
        CHECK(ramsey_decide(CopyKind::clique, 3, 2, n).verdict == ArrowVerdict::arrows);
    for (std::int64_t n = 9; n <= 12; ++n)
        CHECK(vdw_decide(n, 3, 2).verdict == ArrowVerdict::arrows);
}

TEST_CASE("extremal numbers")
{
    ExtremalResult five = extremal_ex(5, 4);
    CHECK(five.exact);
    CHECK(five.edges == 5);
    CHECK(graph_girth(five.witness) == 5u);
    for (std::size_t n = 1; n <= 8; ++n) {
        ExtremalResult r = extremal_ex(n, 3);
        CHECK(r.exact);
        CHECK(r.edges == n * n / 4);
        CHECK(r.witness.size() == r.edges);
    }
    CHECK(extremal_ex(3, 3).edges == 2);
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t m = 3; m <= 6; ++m)
            CHECK(extremal_ex(n, m).edges == oracle::extremal(n, m));
    for (std::size_t n = 4; n <= 8; ++n) {
        CHECK(extremal_ex(n, 4).edges <= extremal_ex(n, 3).edges);
        CHECK(extremal_ex(n, 4).edges >= extremal_ex(n - 1, 4).edges);
    }
    ExtremalResult cut = extremal_ex(12, 4, SearchBudget{100, std::nullopt});
    CHECK(! cut.exact);
}

TEST_CASE("premise for even cycle arrowing")
{
    CHECK(! fact7_premise(10, 5, 2));
    CHECK(fact7_premise(6, 5, 1));
    CHECK(! fact7_premise(3, 5, 1));
    CHECK(extremal_ex(5, 3).edges == 6);
    CHECK(extremal_ex(5, 4).edges == 5);
    // with one colour the premise is consistent with direct arrowing checks
    for (std::size_t n = 4; n <= 8; ++n) {
        const bool premise = fact7_premise(extremal_ex(n, 3).edges, extremal_ex(n, 4).edges, 1);
        if (premise) {
            ExtremalResult triangle_free = extremal_ex(n, 3);
            CHECK(graph_girth(triangle_free.witness) == 4u);
            CHECK(arrows(triangle_free.witness, CopyKind::cycle, 4, 1).verdict == ArrowVerdict::arrows);
        }
    }
}

TEST_CASE("Moore-type lower bounds")
{
    CHECK(moore_lower_bound(Parity::even, 3, 2) == 6);
    CHECK(moore_lower_bound(Parity::odd, 2, 2) == 13);
    CHECK(moore_lower_bound(Parity::even, 2, 1) == 2);
    CHECK(moore_lower_bound(Parity::even, 3, 3) == 14);  // Heawood graph
}

TEST_CASE("bound report")
{
    FBoundsReport four = f_bound_report(4, 2, 6, "searched");
    CHECK(four.lower == 6);
    REQUIRE(four.upper);
    const double expected = 15.0 * 64 * 2 + 160 * std::log2(6.0);
    CHECK(four.upper->log2().to_double() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(four.consistent);
    CHECK(! four.special_exponent);

    CHECK(f_bound_report(6, 3, 20).special_exponent == 6u);
    CHECK(f_bound_report(8, 2).special_exponent == 12u);
    CHECK(f_bound_report(12, 2).special_exponent == 30u);

    FBoundsReport five = f_bound_report(5, 2);
    CHECK(five.parity == Parity::odd);
    CHECK(five.lower == 13);
    REQUIRE(five.ramsey_lower);
    CHECK(*five.ramsey_lower == 8);
    CHECK(five.ramsey == 120u);  // (r+2)! k
    CHECK_THROWS_AS(f_bound_report(2, 2), InputError);
}

TEST_CASE("(r+1)-colouring dichotomy")
{
    const std::size_t n = 2000;
    Colouring last{3, std::vector<std::uint32_t>(n, 3)};
    FactVdwReport a = fact_vdw_check(last, 3, 2, 9);
    CHECK((a.branch == FactBranch::second));
    CHECK(a.last_class == n);

    Colouring first{3, std::vector<std::uint32_t>(n, 1)};
    FactVdwReport b = fact_vdw_check(first, 3, 2, 9);
    CHECK((b.branch == FactBranch::first));
    CHECK(b.mono_count == ap_count_formula(n, 3));

    Colouring residues{3, std::vector<std::uint32_t>(n)};
    for (std::size_t i = 0; i < n; ++i)
        residues.of[i] = static_cast<std::uint32_t>(1 + (i + 1) % 3);
    FactVdwReport c = fact_vdw_check(residues, 3, 2, 9);
    CHECK(c.branch != FactBranch::violation);
    CHECK(c.branch != FactBranch::not_certified);
    // mono AP_3 inside colours 1 and 2: direct count
    std::uint64_t mono = 0;
    for (const auto & ap : oracle::aps(static_cast<std::int64_t>(n), 3)) {
        const auto col = residues.of[ap[0] - 1];
        if (col <= 2 && residues.of[ap[1] - 1] == col && residues.of[ap[2] - 1] == col)
            ++mono;
    }
    CHECK(c.mono_count == mono);
    CHECK(c.ap_w_count == ap_count_formula(n, 9));
    CHECK(c.certified);

    Colouring tiny{3, {1, 2, 1, 2, 3}};
    FactVdwReport d = fact_vdw_check(tiny, 3, 2, 9);
    CHECK(! d.certified);

    FactVdwReport e = fact_vdw_check(residues, 3, 2, 9, true);
    CHECK(e.w_check == ArrowVerdict::arrows);
    CHECK_THROWS_AS(fact_vdw_check(residues, 3, 2, 8, true), InputError);
}
