#include "rss/model.hpp"

#include <cmath>
#include <regex>
#include <set>

#include "rss/params.hpp"

namespace rss {

double euclidean_distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void Instance::validate() const {
    if (rss_sites.empty()) throw ConfigError("instance has no RSS site");
    if (pods.empty()) throw ValidationError("instance has no PODs");
    if (capacity <= 0) throw ValidationError("capacity must be positive");
    if (max_route_time <= 0.0) throw ValidationError("max route time must be positive");

    std::set<NodeId> ids;
    for (const auto& r : rss_sites)
        if (!ids.insert(r.id).second)
            throw ValidationError("duplicate node id " + std::to_string(r.id));
    for (const auto& p : pods) {
        if (!ids.insert(p.id).second)
            throw ValidationError("duplicate node id " + std::to_string(p.id));
        if (p.demand < 0)
            throw ValidationError("POD " + std::to_string(p.id) + " has negative demand");
        if (p.demand > capacity)
            throw InfeasibleError("POD " + std::to_string(p.id) + " demand " +
                                  std::to_string(p.demand) + " exceeds capacity " +
                                  std::to_string(capacity));
    }

    // When the name follows the "-n<count>-k<vehicles>" convention, the n
    // component counts all coordinates: PODs plus RSS sites.
    std::smatch m;
    if (std::regex_search(name, m, std::regex("-n(\\d+)"))) {
        const auto declared = std::stoul(m[1].str());
        if (declared != pods.size() + rss_sites.size())
            throw ValidationError("name declares " + m[1].str() + " nodes but file has " +
                                  std::to_string(pods.size() + rss_sites.size()));
    }
}

DistanceMatrix::DistanceMatrix(std::size_t size, const std::vector<NodeId>& known_ids)
    : n_(size), d_(size * size, 0.0), known_(size, 0) {
    for (NodeId id : known_ids) known_[static_cast<std::size_t>(id)] = 1;
}

DistanceMatrix build_distance_matrix(const Instance& instance) {
    std::vector<std::pair<NodeId, Point>> nodes;
    nodes.reserve(instance.rss_sites.size() + instance.pods.size());
    NodeId max_id = 0;
    for (const auto& r : instance.rss_sites) {
        nodes.emplace_back(r.id, r.location);
        max_id = std::max(max_id, r.id);
    }
    for (const auto& p : instance.pods) {
        nodes.emplace_back(p.id, p.location);
        max_id = std::max(max_id, p.id);
    }

    std::vector<NodeId> ids;
    ids.reserve(nodes.size());
    for (const auto& [id, pt] : nodes) ids.push_back(id);

    DistanceMatrix d(static_cast<std::size_t>(max_id) + 1, ids);
    for (const auto& [i, pi] : nodes)
        for (const auto& [j, pj] : nodes) d.set(i, j, euclidean_distance(pi, pj));
    return d;
}

void SolverParams::validate() const {
    if (capacity <= 0) throw ConfigError("capacity must be positive");
    if (max_route_time <= 0.0) throw ConfigError("max route time must be positive");
    if (service_time_per_stop < 0.0) throw ConfigError("service time must be nonnegative");
    if (speed <= 0.0) throw ConfigError("speed must be positive");
    if (max_outer_iterations <= 0) throw ConfigError("iteration cap must be positive");
}

SolverParams params_from_instance(const Instance& instance) {
    SolverParams p;
    p.capacity = instance.capacity;
    p.max_route_time = instance.max_route_time;
    return p;
}

}  // namespace rss
