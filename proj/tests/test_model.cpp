#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rss/model.hpp"
#include "rss/params.hpp"

using namespace rss;
using testutil::load_data_instance;
using testutil::make_instance;

TEST_SUITE("model") {

TEST_CASE("euclidean_distance basics") {
    CHECK(euclidean_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(euclidean_distance({0, 0}, {3, 4}) == 5.0);
    // depot to first demand node of the 22-node benchmark: sqrt(6^2 + 49^2)
    CHECK(euclidean_distance({145, 215}, {151, 264}) ==
          doctest::Approx(49.3659802).epsilon(1e-9));
}

TEST_CASE("euclidean_distance is symmetric and deterministic") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-500.0, 500.0);
    for (int i = 0; i < 200; ++i) {
        Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
        CHECK(euclidean_distance(a, b) == euclidean_distance(a, b));
        CHECK(euclidean_distance(a, b) >= 0.0);
    }
}

TEST_CASE("distance matrix of coincident depot and POD is all zero") {
    const auto inst = make_instance({4, 2}, {{4, 2}}, {1}, 10, 100);
    const auto d = build_distance_matrix(inst);
    CHECK(d(0, 0) == 0.0);
    CHECK(d(0, 1) == 0.0);
    CHECK(d(1, 0) == 0.0);
    CHECK(d(1, 1) == 0.0);
}

TEST_CASE("collinear points add up exactly") {
    const auto inst = make_instance({0, 0}, {{1, 0}, {2, 0}}, {1, 1}, 10, 100);
    const auto d = build_distance_matrix(inst);
    CHECK(d(0, 2) == d(0, 1) + d(1, 2));
}

TEST_CASE("benchmark matrix is symmetric with zero diagonal") {
    const auto inst = load_data_instance("E-n22-k4");
    REQUIRE(inst.pods.size() == 21);
    const auto d = build_distance_matrix(inst);
    REQUIRE(d.size() == 22);
    for (NodeId i = 0; i < 22; ++i) {
        CHECK(d(i, i) == 0.0);
        for (NodeId j = 0; j < 22; ++j) CHECK(d(i, j) == d(j, i));
    }
}

TEST_CASE("triangle inequality holds on small benchmarks") {
    for (const auto* name : {"E-n22-k4", "E-n23-k3", "E-n30-k3", "E-n33-k4"}) {
        const auto inst = load_data_instance(name);
        const auto d = build_distance_matrix(inst);
        const auto n = static_cast<NodeId>(d.size());
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j)
                for (NodeId k = 0; k < n; ++k)
                    CHECK(d(i, j) <= d(i, k) + d(k, j) + 1e-9);
    }
}

TEST_CASE("matrix rejects unknown node ids") {
    const auto inst = make_instance({0, 0}, {{1, 0}}, {1}, 10, 100);
    const auto d = build_distance_matrix(inst);
    CHECK_THROWS_AS(d(0, 2), ValidationError);
    CHECK_THROWS_AS(d(-1, 0), ValidationError);
}

TEST_CASE("instance validation") {
    SUBCASE("duplicate ids are rejected") {
        auto inst = make_instance({0, 0}, {{1, 0}, {2, 0}}, {1, 1}, 10, 100);
        inst.pods[1].id = inst.pods[0].id;
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("negative demand is rejected") {
        auto inst = make_instance({0, 0}, {{1, 0}}, {1}, 10, 100);
        inst.pods[0].demand = -1;
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("demand above capacity is infeasible") {
        const auto inst = make_instance({0, 0}, {{1, 0}}, {50}, 10, 100);
        CHECK_THROWS_AS(inst.validate(), InfeasibleError);
    }
    SUBCASE("node count must match a -n name component") {
        auto inst = make_instance({0, 0}, {{1, 0}, {2, 0}}, {1, 1}, 10, 100, "X-n5-k2");
        CHECK_THROWS_AS(inst.validate(), ValidationError);
        inst.name = "X-n3-k2";
        CHECK_NOTHROW(inst.validate());
    }
    SUBCASE("no RSS site is a configuration error") {
        auto inst = make_instance({0, 0}, {{1, 0}}, {1}, 10, 100);
        inst.rss_sites.clear();
        CHECK_THROWS_AS(inst.validate(), ConfigError);
    }
}

TEST_CASE("params_from_instance copies the limits") {
    const auto inst = make_instance({0, 0}, {{1, 0}}, {1}, 10, 100);
    const auto p = params_from_instance(inst);
    CHECK(p.capacity == 10);
    CHECK(p.max_route_time == 100.0);
    CHECK(p.speed == 1.0);
    CHECK(p.service_time_per_stop == 0.0);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("params validation") {
    SolverParams p;
    p.capacity = 10;
    p.max_route_time = 5;
    CHECK_NOTHROW(p.validate());
    SUBCASE("capacity") { p.capacity = 0; CHECK_THROWS_AS(p.validate(), ConfigError); }
    SUBCASE("time") { p.max_route_time = 0; CHECK_THROWS_AS(p.validate(), ConfigError); }
    SUBCASE("service") { p.service_time_per_stop = -1; CHECK_THROWS_AS(p.validate(), ConfigError); }
    SUBCASE("speed") { p.speed = 0; CHECK_THROWS_AS(p.validate(), ConfigError); }
    SUBCASE("cap") { p.max_outer_iterations = 0; CHECK_THROWS_AS(p.validate(), ConfigError); }
}

}  // TEST_SUITE
