#include "rss/evaluate.hpp"

#include <algorithm>
#include <map>

namespace rss {

double route_cost(const std::vector<NodeId>& pod_sequence, NodeId rss_id,
                  const DistanceMatrix& dist, const SolverParams& params) {
    if (pod_sequence.empty()) throw ValidationError("route has no PODs");
    double length = dist(rss_id, pod_sequence.front());
    for (std::size_t i = 0; i + 1 < pod_sequence.size(); ++i)
        length += dist(pod_sequence[i], pod_sequence[i + 1]);
    return length / params.speed +
           params.service_time_per_stop * static_cast<double>(pod_sequence.size());
}

double route_cost_closed(const std::vector<NodeId>& pod_sequence, NodeId rss_id,
                         const DistanceMatrix& dist, const SolverParams& params) {
    return route_cost(pod_sequence, rss_id, dist, params) +
           dist(pod_sequence.back(), rss_id) / params.speed;
}

namespace {

PlanStats stats_from_costs(const std::vector<double>& costs) {
    PlanStats s;
    s.route_count = static_cast<int>(costs.size());
    if (costs.empty()) return s;
    const auto [lo, hi] = std::minmax_element(costs.begin(), costs.end());
    for (double c : costs) s.total_cost += c;
    s.max_route_cost = *hi;
    s.cost_range = *hi - *lo;
    s.mean_route_cost = s.total_cost / static_cast<double>(costs.size());
    return s;
}

}  // namespace

PlanStats plan_stats(const Plan& plan, const DistanceMatrix& dist) {
    std::vector<double> costs;
    costs.reserve(plan.routes.size());
    for (const auto& r : plan.routes)
        costs.push_back(route_cost(r.pod_sequence, r.rss_id, dist, plan.params_used));
    return stats_from_costs(costs);
}

PlanStats plan_stats(const std::vector<std::vector<NodeId>>& routes, NodeId rss_id,
                     const DistanceMatrix& dist, const SolverParams& params) {
    std::vector<double> costs;
    costs.reserve(routes.size());
    for (const auto& seq : routes) costs.push_back(route_cost(seq, rss_id, dist, params));
    return stats_from_costs(costs);
}

ComplianceReport check_compliance(const Plan& plan, const Instance& instance,
                                  const DistanceMatrix& dist, const SolverParams& params) {
    std::map<NodeId, long long> demand;
    for (const auto& p : instance.pods) demand[p.id] = p.demand;

    ComplianceReport report;
    int index = 0;
    for (const auto& r : plan.routes) {
        RouteCompliance rc;
        rc.index = ++index;
        rc.cost = route_cost(r.pod_sequence, r.rss_id, dist, params);
        for (NodeId id : r.pod_sequence) {
            auto it = demand.find(id);
            if (it == demand.end())
                throw ValidationError("route references unknown POD " + std::to_string(id));
            rc.demand += it->second;
        }
        rc.time_ok = rc.cost <= params.max_route_time + kTimeEps;
        rc.demand_ok = rc.demand <= params.capacity;
        report.pass = report.pass && rc.time_ok && rc.demand_ok;
        report.routes.push_back(rc);
    }
    return report;
}

bool pods_covered_exactly_once(const std::vector<std::vector<NodeId>>& routes,
                               const Instance& instance) {
    std::map<NodeId, int> count;
    for (const auto& p : instance.pods) count[p.id] = 0;
    for (const auto& route : routes)
        for (NodeId id : route) {
            auto it = count.find(id);
            if (it == count.end()) return false;
            ++it->second;
        }
    for (const auto& [id, c] : count)
        if (c != 1) return false;
    return true;
}

double average_difference(const std::vector<ComparisonRow>& rows) {
    if (rows.empty()) throw ValidationError("average_difference needs at least one row");
    double sum = 0.0;
    for (const auto& r : rows) sum += static_cast<double>(r.difference);
    return sum / static_cast<double>(rows.size());
}

}  // namespace rss
