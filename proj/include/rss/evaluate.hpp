#pragma once

#include <string>
#include <vector>

#include "rss/model.hpp"
#include "rss/params.hpp"
#include "rss/solver.hpp"

namespace rss {

struct PlanStats {
    int route_count = 0;
    double max_route_cost = 0.0;
    double mean_route_cost = 0.0;
    double cost_range = 0.0;  // max - min
    double total_cost = 0.0;
};

/// One benchmark comparison line: generated plan vs. best-known k.
struct ComparisonRow {
    std::string instance;
    double input_max_cost = 0.0;
    int generated_route_count = 0;
    double generated_max_cost = 0.0;
    int best_known_k = 0;
    int difference = 0;  // generated_route_count - best_known_k
};

struct RouteCompliance {
    int index = 0;  // position in the plan, 1-based
    double cost = 0.0;
    long long demand = 0;
    bool time_ok = true;
    bool demand_ok = true;
};

struct ComplianceReport {
    std::vector<RouteCompliance> routes;
    bool pass = true;
};

/// Slack applied to the time limit to absorb accumulated rounding.
inline constexpr double kTimeEps = 1e-9;

/// Open-route time: (d(rss, p1) + sum d(pi, pi+1)) / speed
/// + service_time_per_stop * |sequence|. No return leg.
double route_cost(const std::vector<NodeId>& pod_sequence, NodeId rss_id,
                  const DistanceMatrix& dist, const SolverParams& params);

/// route_cost plus the return leg to the depot; used to reconcile
/// declared totals that were computed over closed tours.
double route_cost_closed(const std::vector<NodeId>& pod_sequence, NodeId rss_id,
                         const DistanceMatrix& dist, const SolverParams& params);

PlanStats plan_stats(const Plan& plan, const DistanceMatrix& dist);

/// Stats of a bare route list anchored at one depot (e.g. a parsed
/// solution file scored against its instance's sole RSS).
PlanStats plan_stats(const std::vector<std::vector<NodeId>>& routes, NodeId rss_id,
                     const DistanceMatrix& dist, const SolverParams& params);

ComplianceReport check_compliance(const Plan& plan, const Instance& instance,
                                  const DistanceMatrix& dist,
                                  const SolverParams& params);

/// True iff every POD of the instance appears in exactly one route.
bool pods_covered_exactly_once(const std::vector<std::vector<NodeId>>& routes,
                               const Instance& instance);

/// Arithmetic mean of the difference fields. Empty input is an error.
double average_difference(const std::vector<ComparisonRow>& rows);

}  // namespace rss
