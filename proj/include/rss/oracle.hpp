#pragma once

#include "rss/evaluate.hpp"
#include "rss/model.hpp"
#include "rss/params.hpp"
#include "rss/solver.hpp"

namespace rss {

/// Exact minimum-route-count answer for a tiny instance.
struct OracleResult {
    bool feasible = false;
    int min_route_count = 0;   // 0 when infeasible
    Plan witness_plan;         // compliant plan achieving the minimum
    long long explored_count = 0;  // states examined (diagnostics)
};

/// Number of PODs the exhaustive search accepts.
inline constexpr int kOracleMaxPods = 8;

/// Exhaustive search over POD-set partitions, per-block visit orders, and
/// depot anchors. Returns the smallest compliant route count with a
/// witness, or feasible=false when no compliant plan exists at all.
/// Instances above kOracleMaxPods are rejected with a guard error.
OracleResult min_routes_bruteforce(const Instance& instance, const SolverParams& params);

}  // namespace rss
