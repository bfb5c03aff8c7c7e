#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rss/evaluate.hpp"
#include "rss/io.hpp"
#include "rss/oracle.hpp"
#include "rss/solver.hpp"

using namespace rss;
using testutil::make_instance;
using testutil::sequences_of;

namespace {

Instance rotated(const Instance& inst, double angle) {
    Instance out = inst;
    const double c = std::cos(angle), s = std::sin(angle);
    const auto spin = [&](Point& p) {
        const Point q{c * p.x - s * p.y, s * p.x + c * p.y};
        p = q;
    };
    for (auto& r : out.rss_sites) spin(r.location);
    for (auto& p : out.pods) spin(p.location);
    return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("small closed-form cases") {
    SUBCASE("one POD needs one route and the witness is compliant") {
        const auto inst = make_instance({0, 0}, {{3, 4}}, {2}, 10, 100);
        const auto p = params_from_instance(inst);
        const auto result = min_routes_bruteforce(inst, p);
        REQUIRE(result.feasible);
        CHECK(result.min_route_count == 1);
        REQUIRE(result.witness_plan.routes.size() == 1);
        CHECK(result.witness_plan.routes[0].pod_sequence == std::vector<NodeId>{1});
        const auto d = build_distance_matrix(inst);
        CHECK(check_compliance(result.witness_plan, inst, d, p).pass);
    }
    SUBCASE("three unit demands with capacity two need two routes") {
        const auto inst =
            make_instance({0, 0}, {{1, 0}, {2, 0}, {3, 0}}, {1, 1, 1}, 2, 1e6);
        const auto result = min_routes_bruteforce(inst, params_from_instance(inst));
        REQUIRE(result.feasible);
        CHECK(result.min_route_count == 2);
    }
    SUBCASE("ample capacity and time collapse to a single route") {
        const auto inst = make_instance(
            {0, 0}, {{1, 0}, {2, 1}, {3, 0}, {4, 1}}, {2, 3, 4, 5}, 14, 1e6);
        const auto result = min_routes_bruteforce(inst, params_from_instance(inst));
        REQUIRE(result.feasible);
        CHECK(result.min_route_count == 1);
        CHECK(result.witness_plan.routes[0].pod_sequence.size() == 4);
    }
    SUBCASE("a POD beyond the time limit is reported infeasible") {
        const auto inst = make_instance({0, 0}, {{10, 0}, {1, 0}}, {1, 1}, 10, 5.0);
        const auto result = min_routes_bruteforce(inst, params_from_instance(inst));
        CHECK_FALSE(result.feasible);
        CHECK(result.min_route_count == 0);
        CHECK(result.witness_plan.routes.empty());
    }
}

TEST_CASE("guard rejects instances above the size limit") {
    std::vector<Point> pts;
    std::vector<long long> demands;
    for (int i = 0; i < kOracleMaxPods + 1; ++i) {
        pts.push_back({double(i), 1.0});
        demands.push_back(1);
    }
    const auto inst = make_instance({0, 0}, pts, demands, 100, 1e6);
    CHECK_THROWS_AS(min_routes_bruteforce(inst, params_from_instance(inst)), ConfigError);
}

TEST_CASE("witness invariants") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const auto inst = testutil::random_instance(rng, 6);
        const auto p = params_from_instance(inst);
        const auto result = min_routes_bruteforce(inst, p);
        REQUIRE(result.feasible);  // random_instance is feasible by construction
        CHECK(result.min_route_count >= 1);
        CHECK(static_cast<int>(result.witness_plan.routes.size()) == result.min_route_count);
        CHECK(result.explored_count > 0);
        const auto d = build_distance_matrix(inst);
        CHECK(pods_covered_exactly_once(sequences_of(result.witness_plan), inst));
        CHECK(check_compliance(result.witness_plan, inst, d, p).pass);
    }
}

TEST_CASE("the minimum is invariant under relabeling and rigid motion") {
    const std::vector<Point> pts{{5, 1}, {9, 4}, {2, 8}, {7, 7}, {1, 2}};
    const std::vector<long long> demands{3, 1, 4, 1, 5};
    const auto inst = make_instance({4, 4}, pts, demands, 8, 25.0);
    const auto base = min_routes_bruteforce(inst, params_from_instance(inst));
    REQUIRE(base.feasible);

    SUBCASE("relabeling PODs") {
        Instance shuffled = inst;
        // Reverse the id assignment; geometry and demands travel with ids.
        const int n = static_cast<int>(shuffled.pods.size());
        for (int i = 0; i < n; ++i) {
            shuffled.pods[i].location = pts[n - 1 - i];
            shuffled.pods[i].demand = demands[n - 1 - i];
        }
        const auto moved = min_routes_bruteforce(shuffled, params_from_instance(shuffled));
        REQUIRE(moved.feasible);
        CHECK(moved.min_route_count == base.min_route_count);
    }
    SUBCASE("translation") {
        Instance shifted = inst;
        for (auto& r : shifted.rss_sites) r.location = {r.location.x + 13, r.location.y - 7};
        for (auto& p : shifted.pods) p.location = {p.location.x + 13, p.location.y - 7};
        const auto moved = min_routes_bruteforce(shifted, params_from_instance(shifted));
        REQUIRE(moved.feasible);
        CHECK(moved.min_route_count == base.min_route_count);
    }
    SUBCASE("rotation") {
        const auto moved =
            min_routes_bruteforce(rotated(inst, 0.7), params_from_instance(inst));
        REQUIRE(moved.feasible);
        CHECK(moved.min_route_count == base.min_route_count);
    }
}

TEST_CASE("the heuristic never beats the oracle") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const auto inst = testutil::random_instance(rng, 7);
        const auto p = params_from_instance(inst);
        const auto exact = min_routes_bruteforce(inst, p);
        REQUIRE(exact.feasible);
        const auto plan = solve(inst, p);
        CHECK(static_cast<int>(plan.routes.size()) >= exact.min_route_count);
    }
}

}  // TEST_SUITE
