#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "mis/construct.hpp"
#include "mis/generators.hpp"
#include "mis/graph.hpp"

using namespace mis;

namespace {

ProbVector probs_for(const Graph& g, const AgeTable& ages,
                     std::vector<int> feasible) {
    ConstructionState st;
    st.graph = &g;
    st.ages = &ages;
    st.feasible = std::move(feasible);
    return selection_probs_v1(st);
}

double prob_sum(const ProbVector& p) {
    double s = 0.0;
    for (const auto& e : p.entries) s += e.prob;
    return s;
}

}  // namespace

TEST_CASE("weight follows the composite age/degree formula") {
    CHECK(weight(0, 0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(weight(-1, 3) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(weight(5, 9) == doctest::Approx(1.0 / 7.0 + 0.1).epsilon(1e-12));
    // strictly decreasing in both arguments
    CHECK(weight(0, 3) < weight(-1, 3));
    CHECK(weight(2, 4) < weight(2, 3));
    CHECK_THROWS_AS(weight(-2, 0), std::domain_error);
    CHECK_THROWS_AS(weight(0, -1), std::domain_error);
}

TEST_CASE("selection probabilities normalize over the feasible set") {
    const Graph g(5, {{1, 2}, {1, 3}, {1, 4}});  // deg(0)=0, deg(1)=3
    AgeTable ages(5);

    SUBCASE("equal weights split evenly") {
        ages[2] = 1;
        ages[3] = 1;
        auto p = probs_for(g, ages, {2, 3});
        CHECK(p.entries[0].prob == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.entries[1].prob == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("hand-evaluated pair") {
        // w(age=0, deg=0) = 1.5, w(age=-1, deg=3) = 1.25
        ages[0] = 0;
        auto p = probs_for(g, ages, {0, 1});
        CHECK(p.entries[0].vertex == 0);
        CHECK(p.entries[0].prob == doctest::Approx(1.5 / 2.75).epsilon(1e-12));
        CHECK(p.entries[1].prob == doctest::Approx(1.25 / 2.75).epsilon(1e-12));
    }

    SUBCASE("single candidate gets probability one") {
        auto p = probs_for(g, ages, {4});
        CHECK(p.entries.size() == 1);
        CHECK(p.entries[0].prob == doctest::Approx(1.0));
    }

    SUBCASE("empty feasible set is an error") {
        CHECK_THROWS_AS(probs_for(g, ages, {}), std::invalid_argument);
    }
}

TEST_CASE("entropy adjustment") {
    SUBCASE("uniform stays uniform, H = ln 4") {
        ProbVector p{{{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}}};
        CHECK(shannon_entropy(p) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
        const auto q = entropy_adjust(p);
        for (const auto& e : q.entries) {
            CHECK(e.prob == doctest::Approx(0.25).epsilon(1e-12));
        }
    }

    SUBCASE("degenerate singleton has zero entropy") {
        ProbVector p{{{7, 1.0}}};
        CHECK(shannon_entropy(p) == doctest::Approx(0.0));
        const auto q = entropy_adjust(p);
        CHECK(q.entries[0].prob == doctest::Approx(1.0));
    }

    SUBCASE("hand-evaluated (0.8, 0.2)") {
        ProbVector p{{{0, 0.8}, {1, 0.2}}};
        CHECK(shannon_entropy(p) ==
              doctest::Approx(0.500402423538188).epsilon(1e-12));
        const auto q = entropy_adjust(p);
        CHECK(q.entries[0].prob ==
              doctest::Approx(0.649939660751206).epsilon(1e-12));
        CHECK(q.entries[1].prob ==
              doctest::Approx(0.350060339248794).epsilon(1e-12));
    }

    SUBCASE("zero entries contribute nothing to H") {
        ProbVector p{{{0, 0.0}, {1, 1.0}}};
        CHECK(shannon_entropy(p) == doctest::Approx(0.0));
    }

    SUBCASE("contraction toward uniform on random vectors") {
        Rng rng(99);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + rng.uniform_int(8);
            ProbVector p;
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
                const double w = rng.uniform01() + 1e-6;
                p.entries.push_back({i, w});
                total += w;
            }
            for (auto& e : p.entries) e.prob /= total;
            const double h = shannon_entropy(p);
            CHECK(h >= 0.0);
            const auto q = entropy_adjust(p);
            CHECK(prob_sum(q) == doctest::Approx(1.0).epsilon(1e-9));
            double max_in = 0.0, max_out = 0.0, min_out = 1.0;
            for (std::size_t i = 0; i < p.entries.size(); ++i) {
                max_in = std::max(max_in, p.entries[i].prob);
                max_out = std::max(max_out, q.entries[i].prob);
                min_out = std::min(min_out, q.entries[i].prob);
            }
            if (h > 0.0) CHECK(max_out <= max_in + 1e-15);
            CHECK(min_out >= 0.0);
        }
    }
}

TEST_CASE("roulette selection") {
    Rng rng(5);

    SUBCASE("single entry") {
        ProbVector p{{{3, 1.0}}};
        CHECK(roulette_select(p, rng) == 3);
    }

    SUBCASE("zero-probability entries never chosen") {
        ProbVector p{{{0, 0.0}, {1, 1.0}}};
        for (int i = 0; i < 200; ++i) CHECK(roulette_select(p, rng) == 1);
    }

    SUBCASE("frequencies match the distribution") {
        ProbVector p{{{0, 0.3}, {1, 0.7}}};
        int count0 = 0;
        const int draws = 100000;
        for (int i = 0; i < draws; ++i) {
            if (roulette_select(p, rng) == 0) ++count0;
        }
        // 3 sigma of Binomial(100000, 0.3): ~434.7
        CHECK(count0 > 30000 - 435);
        CHECK(count0 < 30000 + 435);
    }
}

TEST_CASE("deterministic_select takes argmax with id tie-break") {
    ProbVector p{{{2, 0.2}, {5, 0.5}, {7, 0.3}}};
    CHECK(deterministic_select(p, DeterministicPick::max) == 5);
    CHECK(deterministic_select(p, DeterministicPick::min) == 2);
    ProbVector tied{{{1, 0.5}, {4, 0.5}}};
    CHECK(deterministic_select(tied, DeterministicPick::max) == 1);
}

TEST_CASE("argmax invariant under positive scaling of raw weights") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + rng.uniform_int(10);
        std::vector<double> w(n);
        for (double& x : w) x = rng.uniform01() + 1e-3;
        const double scale = 0.01 + 100.0 * rng.uniform01();
        ProbVector raw, scaled;
        double sum = 0.0, sum_scaled = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += w[i];
            sum_scaled += w[i] * scale;
        }
        for (int i = 0; i < n; ++i) {
            raw.entries.push_back({i, w[i] / sum});
            scaled.entries.push_back({i, w[i] * scale / sum_scaled});
        }
        CHECK(deterministic_select(raw, DeterministicPick::max) ==
              deterministic_select(scaled, DeterministicPick::max));
    }
}

TEST_CASE("construct_original spec cases") {
    ConstructParams cp;
    cp.d_rate = 1.0;

    const Graph path(3, {{0, 1}, {1, 2}});
    Rng rng(1);
    Solution s = construct_original(path, cp, rng);
    CHECK(s.vertices == std::vector<int>{0, 2});
    CHECK(s.score == 2);

    const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng r2(seed);
        cp.d_rate = 0.5;
        CHECK(construct_original(triangle, cp, r2).score == 1);
    }

    const Graph empty(5, {});
    Rng r3(1);
    CHECK(construct_original(empty, cp, r3).score == 5);

    const Graph none(0, {});
    Rng r4(1);
    CHECK(construct_original(none, cp, r4).score == 0);
}

TEST_CASE("construct_weighted spec cases") {
    ConstructParams cp;
    cp.d_rate = 1.0;

    SUBCASE("empty graph picks all vertices in id order") {
        const Graph g(3, {});
        AgeTable ages(3);
        Rng rng(1);
        const Solution s =
            construct_weighted(g, ages, cp, rng, HeuristicVariant::v1_weighted);
        CHECK(s.vertices == std::vector<int>{0, 1, 2});
    }

    SUBCASE("star keeps the four leaves") {
        const Graph star(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}});
        AgeTable ages(5);
        for (int v = 0; v < 5; ++v) ages[v] = 1;
        Rng rng(1);
        const Solution s =
            construct_weighted(star, ages, cp, rng, HeuristicVariant::v1_weighted);
        CHECK(s.vertices == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("lower age wins between isolated vertices") {
        const Graph g(2, {});
        AgeTable ages(2);
        ages[0] = 0;
        ages[1] = 10;
        Rng rng(1);
        // w(0) = 1.5 > w(1) = 1/12 + 1
        ConstructionState st{&g, &ages, {0, 1}, 1.0, 10};
        const auto p = selection_probs_v1(st);
        CHECK(p.entries[0].prob > p.entries[1].prob);
        const Solution s =
            construct_weighted(g, ages, cp, rng, HeuristicVariant::v1_weighted);
        CHECK(s.vertices == std::vector<int>{0, 1});
    }

    SUBCASE("deterministic given ages at d_rate 1") {
        const Graph g = gen_erdos_renyi(40, 0.15, 3);
        AgeTable ages(40);
        for (int v = 0; v < 40; v += 3) ages[v] = v % 4;
        for (auto variant :
             {HeuristicVariant::v1_weighted, HeuristicVariant::v2_entropy}) {
            Rng r1(11), r2(999);  // rng must not matter when d_rate = 1
            const Solution a = construct_weighted(g, ages, cp, r1, variant);
            const Solution b = construct_weighted(g, ages, cp, r2, variant);
            CHECK(a.vertices == b.vertices);
        }
    }
}

TEST_CASE("all variants produce feasible maximal sets") {
    Rng seeder(2024);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + seeder.uniform_int(60);
        const double density = seeder.uniform01() * 0.3;
        const Graph g = gen_erdos_renyi(n, density, seeder.next_u64());
        AgeTable ages(n);
        for (int v = 0; v < n; ++v) {
            ages[v] = seeder.uniform_int(5) - 1;  // mix of -1 and small ages
        }
        ConstructParams cp;
        cp.d_rate = seeder.uniform01();
        cp.candidate_list_size = 1 + seeder.uniform_int(10);

        Rng rng(seeder.next_u64());
        for (auto variant :
             {HeuristicVariant::original, HeuristicVariant::v1_weighted,
              HeuristicVariant::v2_entropy}) {
            const Solution s =
                variant == HeuristicVariant::original
                    ? construct_original(g, cp, rng)
                    : construct_weighted(g, ages, cp, rng, variant);
            const auto check = check_solution(g, s);
            CHECK(check.feasible);
            CHECK(check.maximal);
            CHECK(s.score == static_cast<int>(s.vertices.size()));
            ++checked;
        }
    }
    CHECK(checked == 180);
}
