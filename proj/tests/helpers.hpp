#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rss/evaluate.hpp"
#include "rss/io.hpp"
#include "rss/model.hpp"
#include "rss/solver.hpp"

namespace testutil {

using namespace rss;

inline std::string data_path(const std::string& file) {
    return std::string(RSS_DATA_DIR) + "/" + file;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing test file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Instance load_data_instance(const std::string& name) {
    std::ifstream in(data_path(name + ".txt"));
    if (!in) throw std::runtime_error("missing instance " + name);
    return parse_instance(in, name);
}

inline SolutionFile load_data_solution(const std::string& name) {
    std::ifstream in(data_path("opt-" + name + ".txt"));
    if (!in) throw std::runtime_error("missing solution for " + name);
    return parse_solution(in);
}

/// Instance with a single depot (id 0) and PODs with ids 1..n in the
/// order given.
inline Instance make_instance(const Point& depot, const std::vector<Point>& pod_points,
                              const std::vector<long long>& demands, long long capacity,
                              double max_route_time, const std::string& name = "toy") {
    Instance inst;
    inst.name = name;
    inst.rss_sites.push_back({0, depot});
    for (std::size_t i = 0; i < pod_points.size(); ++i)
        inst.pods.push_back({static_cast<NodeId>(i + 1), pod_points[i],
                             i < demands.size() ? demands[i] : 1});
    inst.capacity = capacity;
    inst.max_route_time = max_route_time;
    return inst;
}

/// Random feasible instance: every POD fits a vehicle and is reachable
/// within the time limit on its own, so a compliant plan always exists.
inline Instance random_instance(std::mt19937& rng, int max_pods) {
    std::uniform_int_distribution<int> pod_count(1, max_pods);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    std::uniform_int_distribution<long long> cap_pick(10, 50);

    const int n = pod_count(rng);
    const long long capacity = cap_pick(rng);
    std::uniform_int_distribution<long long> demand_pick(1, capacity);

    Point depot{coord(rng), coord(rng)};
    std::vector<Point> points;
    std::vector<long long> demands;
    double max_leg = 0.0;
    for (int i = 0; i < n; ++i) {
        points.push_back({coord(rng), coord(rng)});
        demands.push_back(demand_pick(rng));
        max_leg = std::max(max_leg, euclidean_distance(depot, points.back()));
    }
    std::uniform_real_distribution<double> slack(1.1, 2.5);
    return make_instance(depot, points, demands, capacity,
                         std::max(max_leg, 1.0) * slack(rng), "random");
}

inline std::vector<std::vector<NodeId>> sequences_of(const Plan& plan) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& r : plan.routes) out.push_back(r.pod_sequence);
    return out;
}

}  // namespace testutil
