#include "oracles.hpp"

#include <ramgirth/copies.hpp>
#include <ramgirth/degree.hpp>
#include <ramgirth/errors.hpp>
#include <ramgirth/girth.hpp>
#include <ramgirth/io.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ramgirth;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

UniformHypergraph hyper(std::size_t h, std::size_t n, std::vector<std::vector<Vertex>> edges)
{
    return UniformHypergraph(h, n, std::move(edges));
}

// {1,2,3},{1,3,5} shifted to 0-based indices
UniformHypergraph two_aps() { return hyper(3, 6, {{0, 1, 2}, {0, 2, 4}}); }

// {1,2,3},{3,4,5},{5,6,1}
UniformHypergraph loose_triangle() { return hyper(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}); }

} // namespace

TEST_CASE("graph_from_edges canonicalizes and validates")
{
    Graph t = graph_from_edges(3, Pairs{{0, 1}, {1, 2}, {2, 0}, {1, 0}});
    CHECK(t.size() == 3);
    CHECK(t == complete_graph(3));
    CHECK(graph_from_edges(4, Pairs{}).size() == 0);
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            all.emplace_back(v, u);
    Graph k5 = graph_from_edges(5, all);
    CHECK(k5.size() == 10);
    CHECK(k5.edge_id(3, 4) == 9u);
    CHECK_THROWS_AS(graph_from_edges(3, Pairs{{0, 3}}), InputError);
    CHECK_THROWS_AS(graph_from_edges(3, Pairs{{1, 1}}), InputError);
}

TEST_CASE("graph girth")
{
    CHECK(graph_girth(complete_graph(4)) == 3u);
    CHECK(! graph_girth(path_graph(6)));
    CHECK(graph_girth(cycle_graph(7)) == 7u);
    CHECK(graph_girth(complete_bipartite_graph(3, 3)) == 4u);
    Graph petersen = read_graph_file(FIXTURE_DIR "/petersen.graph");
    CHECK(petersen.size() == 15);
    CHECK(graph_girth(petersen) == oracle::girth(petersen));
    CHECK(graph_girth(petersen) == 5u);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 4 == 0)
                    pairs.emplace_back(u, v);
        Graph g = graph_from_edges(n, pairs);
        CHECK(graph_girth(g) == oracle::girth(g));
    }
}

TEST_CASE("systems of copies")
{
    UniformHypergraph tri = system_of_copies(CopyKind::cycle, complete_graph(4), 3);
    CHECK(tri.uniformity() == 3);
    CHECK(tri.universe_size() == 6);
    CHECK(tri.edge_count() == 4);

    UniformHypergraph ap = ap_system(5, 3);
    REQUIRE(ap.edge_count() == 4);
    std::set<std::vector<Label>> labelled;
    for (std::size_t e = 0; e < ap.edge_count(); ++e) {
        std::vector<Label> l;
        for (auto v : ap.edge(e))
            l.push_back(ap.label(v));
        labelled.insert(l);
    }
    CHECK(labelled == oracle::aps(5, 3));

    UniformHypergraph k3 = system_of_copies(CopyKind::clique, complete_graph(5), 3);
    CHECK(k3.edge_count() == 10);
    CHECK(k3.universe_size() == 10);
    CHECK(k3.uniformity() == 3);
    CHECK(system_of_copies(CopyKind::clique, complete_graph(5), 4).uniformity() == 6);

    CHECK(system_of_copies(CopyKind::cycle, complete_graph(4), 5).empty());
    CHECK(system_of_copies(CopyKind::cycle, complete_bipartite_graph(3, 3), 4).edge_count() == 9);
    CHECK(system_of_copies(CopyKind::cycle, complete_graph(5), 5).edge_count() == 12);

    std::vector<std::int64_t> set{2, 4, 6, 7, 10};
    UniformHypergraph sub = ap_system(set, 3);
    CHECK(sub.edge_count() == 3);  // 2 4 6, 2 6 10, 4 7 10
    CHECK(sub.label(sub.edge(2)[2]) == 10);
}

TEST_CASE("AP count formula")
{
    CHECK(ap_count_formula(5, 3) == 4);
    CHECK(ap_count_formula(9, 3) == 16);
    CHECK(ap_count_formula(7, 7) == 1);
    CHECK(ap_count_formula(2, 3) == 0);
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::size_t k = 3; k <= 5; ++k)
            CHECK(ap_count_formula(n, k) == oracle::aps(n, static_cast<std::int64_t>(k)).size());
}

TEST_CASE("degree statistics")
{
    DegreeStats k6 = degree_stats(system_of_copies(CopyKind::clique, complete_graph(6), 3));
    CHECK(k6.avg_d(1) == 4);
    CHECK(k6.max_d(1) == 4);
    CHECK(k6.max_d(3) == 1);

    DegreeStats ap = degree_stats(ap_system(9, 3));
    CHECK(ap.avg_d(1) == Rational(16, 3));
    CHECK(ap.avg_d(1) >= Rational(9, 2));
    CHECK(ap.avg_d(1) * 9 == 3 * 16);

    DegreeStats one = degree_stats(hyper(3, 5, {{0, 2, 4}}));
    CHECK(one.max_d(3) == 1);
    CHECK(one.max_d(2) == 1);
    CHECK(one.avg_d(3) == Rational(3, 5));
    for (std::size_t j = 1; j <= 3; ++j)
        CHECK(Rational(one.max_d(j)) >= one.avg_d(j));

    std::vector<Vertex> pair{0, 2};
    CHECK(set_degree(two_aps(), pair) == 2);
    CHECK_THROWS_AS(degree_stats(UniformHypergraph(3, 0, {})), InputError);
}

TEST_CASE("sparsity girth examples")
{
    GirthVerdict v = sparsity_girth(two_aps(), 3);
    CHECK(! v.satisfied);
    CHECK(v.witness == std::vector<std::uint32_t>{0, 1});
    CHECK(v.witness_span == 4);

    CHECK(sparsity_girth(loose_triangle(), 3).satisfied);
    GirthVerdict w = sparsity_girth(loose_triangle(), 4);
    CHECK(! w.satisfied);
    CHECK(w.witness.size() == 3);
    CHECK(w.witness_span == 6);

    CHECK(sparsity_girth(hyper(3, 4, {{0, 1, 2}}), 10).satisfied);
    CHECK(sparsity_girth(hyper(3, 4, {}), 10).satisfied);
    CHECK_THROWS_AS(sparsity_girth(two_aps(), 1), InputError);
}

TEST_CASE("short cycle examples")
{
    CycleReport a = enumerate_short_cycles(two_aps(), 3);
    CHECK(a.count(2) == 1);
    CHECK(a.cycles.size() == 1);

    CycleReport b = enumerate_short_cycles(loose_triangle(), 4);
    CHECK(b.count(2) == 0);
    CHECK(b.count(3) == 1);
    REQUIRE(b.cycles.size() == 1);
    CHECK(b.cycles[0].edges == std::vector<std::uint32_t>{0, 1, 2});

    // triangles of K_4 over its edge universe: the oracle decides
    UniformHypergraph tri = system_of_copies(CopyKind::cycle, complete_graph(4), 3);
    CycleReport c = enumerate_short_cycles(tri, 3);
    CHECK(c.count(2) == oracle::count_j_cycles(tri, 2));
    CycleReport d = enumerate_short_cycles(tri, 5);
    for (std::size_t j = 2; j < 5; ++j)
        CHECK(d.count(j) == oracle::count_j_cycles(tri, j));
}

TEST_CASE("cycle and sparsity verdicts agree with the oracles on random instances")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t h = 2 + trial % 3;
        UniformHypergraph hg = oracle::random_hypergraph(rng, 9, 6, h);
        const std::size_t g = 2 + rng() % 5;
        GirthVerdict v = sparsity_girth(hg, g);
        oracle::SparsityVerdict o = oracle::sparsity(hg, g);
        CHECK(v.satisfied == o.satisfied);
        CHECK(v.witness == o.witness);
        if (! v.satisfied)
            CHECK(edge_span(hg, v.witness) <= (h - 1) * v.witness.size());
        CycleReport rep = enumerate_short_cycles(hg, g);
        for (std::size_t j = 2; j < g; ++j)
            CHECK(rep.count(j) == oracle::count_j_cycles(hg, j));
        if (! rep.empty())
            CHECK(! v.satisfied);
        // edges pairwise sharing at most one vertex: both notions coincide
        if (g > 2 && rep.count(2) == 0)
            CHECK(rep.empty() == v.satisfied);
    }
}

TEST_CASE("cycle counts in complete graphs")
{
    for (std::size_t n = 3; n <= 7; ++n) {
        const Graph complete = complete_graph(n);
        std::vector<std::vector<Vertex>> edges;
        for (const auto & e : complete.edges())
            edges.push_back({e.u, e.v});
        const UniformHypergraph kn(2, n, edges);
        CycleReport rep = enumerate_short_cycles(kn, n + 1);
        for (std::size_t j = 3; j <= n; ++j)
            CHECK(BigInt(rep.count(j)) == factorial(j - 1) / 2 * binomial(n, j));
    }
}

TEST_CASE("colouring verification")
{
    Graph k33 = complete_bipartite_graph(3, 3);
    UniformHypergraph c4 = system_of_copies(CopyKind::cycle, k33, 4);
    // parts {0,1,2} and {3,4,5}; the hexagon 0-3-1-4-2-5-0 gets colour 1
    Colouring c{2, std::vector<std::uint32_t>(k33.size(), 2)};
    const std::pair<Vertex, Vertex> hexagon[] = {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}};
    for (auto [u, v] : hexagon)
        c.of[*k33.edge_id(u, v)] = 1;
    CHECK(verify_colouring(c4, c));

    Colouring constant{2, std::vector<std::uint32_t>(k33.size(), 1)};
    CHECK(! verify_colouring(c4, constant));
    CHECK(verify_colouring(UniformHypergraph(3, 4, {}), Colouring{1, {1, 1, 1, 1}}));
    CHECK_THROWS_AS(verify_colouring(c4, Colouring{2, {1, 2}}), InputError);
    CHECK_THROWS_AS(verify_colouring(c4, Colouring{2, std::vector<std::uint32_t>(9, 3)}), InputError);
}

TEST_CASE("text formats round-trip and report line numbers")
{
    std::stringstream s;
    write_graph(s, complete_graph(5));
    CHECK(read_graph(s) == complete_graph(5));

    std::stringstream hs;
    write_hypergraph(hs, loose_triangle());
    CHECK(read_hypergraph(hs) == loose_triangle());

    std::stringstream cs;
    Colouring c{3, {1, 3, 2, 2}};
    write_colouring(cs, c);
    CHECK(read_colouring(cs) == c);

    std::stringstream short_file("4 3\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_graph(short_file), FormatError);
    std::stringstream bad("3 2\n0 1\n1 x\n");
    try {
        read_graph(bad);
        FAIL("expected a format error");
    }
    catch (const FormatError & e) {
        CHECK(e.line() == 3);
    }
    std::stringstream unsorted("3 5 1\n2 1 0\n");
    CHECK_THROWS_AS(read_hypergraph(unsorted), FormatError);
    CHECK(read_hypergraph_file(FIXTURE_DIR "/two_aps.hgr") == two_aps());
}
