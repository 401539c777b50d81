#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "henson/build.hpp"
#include "henson/errors.hpp"
#include "henson/graph.hpp"
#include "henson/subcopy.hpp"

using namespace henson;

TEST_CASE("standard copy basics, n=2") {
    Graph g = build_standard_copy(2, 5);
    for (std::size_t j = 0; j + 1 < 5; ++j) CHECK(g.edge(j, j + 1));
    CHECK(clique_free(g, 3));
    CHECK(g.label(0) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(g.label(1) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("forced clique window, n=3") {
    Graph g = build_standard_copy(3, 6);
    CHECK(g.edge(1, 2));
    CHECK(g.edge(1, 3));
    CHECK(g.edge(2, 3));
    for (std::size_t j = 3; j < 6; ++j) {
        CHECK(g.edge(j, j - 1));
        CHECK(g.edge(j, j - 2));
    }
    CHECK(clique_free(g, 4));
}

TEST_CASE("builder parameter errors") {
    CHECK_THROWS_AS(build_standard_copy(1, 5), PreconditionViolation);
    CHECK_THROWS_AS(build_standard_copy(2, 0), PreconditionViolation);
}

TEST_CASE("dense coverage stats, n=2 size 500") {
    BuildOptions opt;
    opt.n = 2;
    opt.size = 500;
    BuildStats st;
    Graph g = build_standard_copy(opt, &st);
    MESSAGE("n=2 universe=", st.dense_universe, " pending=", st.dense_pending,
            " done_at=", st.dense_done_at);
    CHECK(clique_free(g, 3));
    CHECK(st.dense_pending == 0);
}

TEST_CASE("dense coverage stats, n=3 size 300") {
    BuildOptions opt;
    opt.n = 3;
    opt.size = 300;
    BuildStats st;
    Graph g = build_standard_copy(opt, &st);
    MESSAGE("n=3 universe=", st.dense_universe, " pending=", st.dense_pending,
            " done_at=", st.dense_done_at);
    CHECK(clique_free(g, 4));
    CHECK(st.dense_pending == 0);
}

TEST_CASE("prefix monotonicity") {
    Graph small = build_standard_copy(2, 120);
    Graph big = build_standard_copy(2, 240);
    for (std::size_t j = 0; j < 120; ++j)
        for (std::size_t i = 0; i < j; ++i) CHECK(small.edge(j, i) == big.edge(j, i));
}

TEST_CASE("identity greedy subcopy") {
    Graph g = build_standard_copy(2, 60);
    Subcopy sc = greedy_subcopy(g, 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(sc.selected[i] == i);
    CHECK(sc.order_isomorphic());
}

TEST_CASE("extension soundness: all small queries over first 20 vertices") {
    Graph g2 = build_standard_copy(2, 500);
    Graph g3 = build_standard_copy(3, 300);
    for (const Graph* gp : {&g2, &g3}) {
        const Graph& g = *gp;
        std::size_t missing = 0, total = 0;
        std::vector<std::size_t> sup;
        // all supports U of size <= 4 within [0,20), all K_n-free splits
        for (std::uint32_t U = 1; U < (1u << 20); ++U) {
            if (__builtin_popcount(U) > 4) continue;
            for (std::uint32_t D = 0;; D = (D - U) & U) {
                std::vector<std::size_t> Dv, Fv;
                for (std::size_t b = 0; b < 20; ++b) {
                    if ((D >> b) & 1) Dv.push_back(b);
                    else if ((U >> b) & 1) Fv.push_back(b);
                }
                if (!contains_clique(g, Dv, (std::size_t)g.n())) {
                    ++total;
                    if (find_witness(g, Dv, Fv) >= g.size()) ++missing;
                }
                if (D == U) break;
            }
        }
        MESSAGE("n=", g.n(), " total=", total, " missing=", missing);
        CHECK(missing == 0);
    }
}

TEST_CASE("lane replays on a large host") {
    BuildOptions opt;
    opt.n = 2;
    opt.size = 3000;
    BuildStats st;
    Graph g = build_standard_copy(opt, &st);
    MESSAGE("lane progress: ", st.lane_progress[0], " ", st.lane_progress[1], " ",
            st.lane_progress[2], " ", st.lane_progress[3]);
    Subcopy sc = lane_subcopy(g, opt);
    CHECK(sc.selected.size() == opt.lane_stages);
    CHECK(sc.order_isomorphic());
    for (LabelClass c : opt.class_lanes) {
        Subcopy cc = lane_subcopy(g, opt, c);
        CHECK(cc.order_isomorphic());
        MESSAGE("class lane (", c.modulus, ",", c.residue, ") size ", cc.selected.size());
        std::size_t distinct_labels = 0, prev = SIZE_MAX;
        for (std::size_t v : cc.selected) {
            CHECK(g.label(v).first % c.modulus == c.residue);
            if (g.label(v).first != prev) { ++distinct_labels; prev = g.label(v).first; }
        }
        MESSAGE("  distinct label runs: ", distinct_labels);
    }
}
