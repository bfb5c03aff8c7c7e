#include "rss/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace rss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

OracleResult min_routes_bruteforce(const Instance& instance, const SolverParams& params) {
    instance.validate();
    params.validate();
    const int m = static_cast<int>(instance.pods.size());
    if (m > kOracleMaxPods)
        throw ConfigError("oracle accepts at most " + std::to_string(kOracleMaxPods) +
                          " PODs, got " + std::to_string(m));

    const auto dist = build_distance_matrix(instance);
    std::vector<NodeId> rss_ids;
    for (const auto& r : instance.rss_sites) rss_ids.push_back(r.id);
    std::sort(rss_ids.begin(), rss_ids.end());

    OracleResult result;
    result.witness_plan.instance_name = instance.name;
    result.witness_plan.params_used = params;

    const int full = (1 << m) - 1;

    // Cheapest open path over each POD subset: g[mask][last] is the minimal
    // depot->...->last distance covering exactly `mask`, with the depot
    // chosen freely (only the first leg depends on it). Equivalent to
    // enumerating every visit order and anchor per block.
    std::vector<std::array<double, kOracleMaxPods>> g(static_cast<std::size_t>(full) + 1);
    std::vector<std::array<signed char, kOracleMaxPods>> parent(
        static_cast<std::size_t>(full) + 1);
    for (auto& row : g) row.fill(kInf);
    for (auto& row : parent) row.fill(-1);

    auto pod_id = [&](int i) { return instance.pods[static_cast<std::size_t>(i)].id; };
    auto depot_leg = [&](int i) {
        double best = kInf;
        for (NodeId r : rss_ids) best = std::min(best, dist(r, pod_id(i)));
        return best;
    };

    for (int i = 0; i < m; ++i) g[1u << i][static_cast<std::size_t>(i)] = depot_leg(i);
    for (int mask = 1; mask <= full; ++mask)
        for (int last = 0; last < m; ++last) {
            if (!(mask & (1 << last)) || g[mask][last] == kInf) continue;
            for (int next = 0; next < m; ++next) {
                if (mask & (1 << next)) continue;
                ++result.explored_count;
                const int grown = mask | (1 << next);
                const double candidate = g[mask][last] + dist(pod_id(last), pod_id(next));
                if (candidate < g[grown][next]) {
                    g[grown][next] = candidate;
                    parent[grown][next] = static_cast<signed char>(last);
                }
            }
        }

    std::vector<double> block_time(static_cast<std::size_t>(full) + 1, kInf);
    std::vector<long long> block_demand(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint8_t> block_ok(static_cast<std::size_t>(full) + 1, 0);
    for (int mask = 1; mask <= full; ++mask) {
        double best = kInf;
        long long demand = 0;
        int stops = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) {
                best = std::min(best, g[mask][i]);
                demand += instance.pods[static_cast<std::size_t>(i)].demand;
                ++stops;
            }
        block_time[mask] = best / params.speed + params.service_time_per_stop * stops;
        block_demand[mask] = demand;
        block_ok[mask] = block_time[mask] <= params.max_route_time + kTimeEps &&
                         demand <= params.capacity;
    }

    // Minimum number of feasible blocks partitioning each subset. Finding
    // the exact minimum is equivalent to trying k = 1, 2, ... partitions
    // with early exit at the first feasible count.
    constexpr int kNone = 1 << 30;
    std::vector<int> blocks_needed(static_cast<std::size_t>(full) + 1, kNone);
    std::vector<int> chosen_block(static_cast<std::size_t>(full) + 1, 0);
    blocks_needed[0] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        const int anchor = mask & -mask;  // canonical: blocks contain the lowest POD
        for (int sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & anchor) || !block_ok[sub]) continue;
            ++result.explored_count;
            if (blocks_needed[mask ^ sub] + 1 < blocks_needed[mask]) {
                blocks_needed[mask] = blocks_needed[mask ^ sub] + 1;
                chosen_block[mask] = sub;
            }
        }
    }

    if (blocks_needed[full] >= kNone) return result;  // feasible stays false

    result.feasible = true;
    result.min_route_count = blocks_needed[full];
    for (int togo = full; togo;) {
        const int mask = chosen_block[togo];

        int last = -1;
        for (int i = 0; i < m; ++i)
            if ((mask & (1 << i)) && (last < 0 || g[mask][i] < g[mask][last])) last = i;
        std::vector<NodeId> sequence;
        for (int at = last, cover = mask; at >= 0;) {
            sequence.push_back(pod_id(at));
            const int prev = parent[cover][at];
            cover ^= 1 << at;
            at = prev;
        }
        std::reverse(sequence.begin(), sequence.end());

        NodeId best_rss = rss_ids.front();
        for (NodeId r : rss_ids)
            if (dist(r, sequence.front()) < dist(best_rss, sequence.front())) best_rss = r;

        Route route;
        route.pod_sequence = sequence;
        route.rss_id = best_rss;
        route.seed_pod = sequence.front();
        route.total_time = route_cost(sequence, best_rss, dist, params);
        route.total_demand = block_demand[mask];
        result.witness_plan.routes.push_back(std::move(route));
        togo ^= mask;
    }
    return result;
}

}  // namespace rss
