#include <doctest.h>

#include <numeric>

#include "sfnet/builder.hpp"
#include "sfnet/metrics.hpp"
#include "sfnet/rng.hpp"
#include "test_util.hpp"

using namespace sfnet;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::degrees_of;
using testutil::random_graph;

TEST_CASE("wedge counts on named graphs") {
    CHECK(count_wedges(complete_graph(4)) == 12);
    const SimpleGraph path3(3, {{0, 1}, {1, 2}});
    CHECK(count_wedges(path3) == 1);
    SimpleGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(count_wedges(star) == 10);
}

TEST_CASE("triangle counts on named graphs") {
    CHECK(count_triangles(complete_graph(4)) == 4);
    CHECK(count_triangles(cycle_graph(5)) == 0);
    CHECK(count_triangles_brute(complete_graph(4)) == 4);
    CHECK(count_triangles_brute(SimpleGraph(10, {})) == 0);
    const SimpleGraph pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(count_triangles_brute(pendant) == 1);
    CHECK_THROWS(count_triangles_brute(SimpleGraph(501, {})));
}

TEST_CASE("fast count equals brute force across densities") {
    SplitMix64 rng(101);
    int done = 0;
    for (double p : {0.05, 0.2, 0.5}) {
        for (int t = 0; t < 67; ++t) {
            const auto n = static_cast<VertexId>(5 + uniform_below(rng, 56));
            const auto g = random_graph(n, p, rng);
            const auto fast = count_triangles(g);
            CHECK(fast == count_triangles_brute(g));
            CHECK(3 * fast <= count_wedges(g));
            ++done;
        }
    }
    CHECK(done == 201);
}

TEST_CASE("8-vertex half-density graphs against the triple loop") {
    SplitMix64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(8, 0.5, rng);
        CHECK(count_triangles(g) == count_triangles_brute(g));
    }
}

TEST_CASE("clustering coefficients on named graphs") {
    CHECK(global_clustering(complete_graph(4)) == 1.0);
    CHECK(average_local_clustering(complete_graph(4)) == 1.0);
    const SimpleGraph path3(3, {{0, 1}, {1, 2}});
    CHECK(global_clustering(path3) == 0.0);
    SimpleGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(global_clustering(star) == 0.0);
    // triangle plus isolated vertex: three locals at 1, one at 0
    const SimpleGraph tri_iso(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(average_local_clustering(tri_iso) == 0.75);
    CHECK(average_local_clustering(cycle_graph(5)) == 0.0);
}

TEST_CASE("complete graphs have both coefficients exactly 1") {
    for (VertexId n = 3; n <= 10; ++n) {
        const auto g = complete_graph(n);
        CHECK(global_clustering(g) == 1.0);
        CHECK(average_local_clustering(g) == 1.0);
    }
}

TEST_CASE("bipartite graphs are triangle free") {
    SplitMix64 rng(303);
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<VertexId>(10 + uniform_below(rng, 91));
        std::vector<bool> side(n);
        for (VertexId v = 0; v < n; ++v) side[v] = rng.next() & 1;
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (side[u] != side[v] && rng.next_open01() < 0.3)
                    edges.emplace_back(u, v);
        CHECK(count_triangles(SimpleGraph(n, std::move(edges))) == 0);
    }
}

TEST_CASE("per-vertex triangle counts sum to 3T") {
    SplitMix64 rng(404);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(40, 0.2, rng);
        std::vector<std::uint64_t> per_vertex;
        const auto total = count_triangles(g, &per_vertex);
        CHECK(std::accumulate(per_vertex.begin(), per_vertex.end(), std::uint64_t{0}) ==
              3 * total);
    }
}

TEST_CASE("degree h-index") {
    CHECK(degree_h_index({5, 4, 3, 2, 1}) == 3);
    CHECK(degree_h_index({1, 1, 1, 1}) == 1);
    CHECK(degree_h_index({0}) == 0);
    CHECK(degree_h_index({}) == 0);
    CHECK(degree_h_index({2, 5, 1, 3, 4}) == 3); // unsorted input
}

TEST_CASE("compute_metrics bundles consistently") {
    const auto k4 = compute_metrics(complete_graph(4));
    CHECK(k4.edges == 6);
    CHECK(k4.wedges == 12);
    CHECK(k4.triangles == 4);
    CHECK(k4.c1 == 1.0);
    CHECK(k4.c2 == 1.0);
    CHECK(k4.max_degree == 3);

    const auto c5 = compute_metrics(cycle_graph(5));
    CHECK(c5.edges == 5);
    CHECK(c5.wedges == 5);
    CHECK(c5.triangles == 0);
    CHECK(c5.c1 == 0.0);
    CHECK(c5.c2 == 0.0);
    CHECK(c5.max_degree == 2);

    SplitMix64 rng(777);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_graph(8, 0.5, rng);
        const auto m = compute_metrics(g);
        CHECK(m.edges == g.num_edges());
        CHECK(m.wedges == count_wedges(g));
        CHECK(m.triangles == count_triangles(g));
        CHECK(m.c1 == doctest::Approx(global_clustering(g)));
        CHECK(m.c2 == doctest::Approx(average_local_clustering(g)));
        CHECK(m.max_degree == g.max_degree());
    }
}

TEST_CASE("wedges depend only on the degree sequence") {
    SplitMix64 rng(111);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(30, 0.3, rng);
        const auto rebuilt = havel_hakimi(degrees_of(g));
        REQUIRE(rebuilt.has_value());
        CHECK(count_wedges(g) == count_wedges(*rebuilt));
    }
}
