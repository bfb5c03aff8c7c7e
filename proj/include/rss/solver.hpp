#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rss/model.hpp"
#include "rss/params.hpp"

namespace rss {

/// A growing path of PODs. The seed end is the element the chain was
/// seeded with (fPOD); the grow end is the most recently attached POD.
struct Chain {
    std::vector<NodeId> pods;  // nonempty, no repeats

    NodeId seed_end() const { return pods.front(); }
    NodeId grow_end() const { return pods.back(); }
};

/// An open route: depot -> pod_sequence.front() -> ... -> pod_sequence.back().
struct Route {
    std::vector<NodeId> pod_sequence;  // traversal order from the depot
    NodeId rss_id = 0;                 // attached depot
    NodeId seed_pod = -1;              // fPOD the originating chain grew from
    double total_time = 0.0;           // == route_cost(pod_sequence, ...)
    long long total_demand = 0;        // sum of member POD demands
};

struct Plan {
    std::vector<Route> routes;
    std::string instance_name;
    SolverParams params_used;
};

/// Binary link indicators extracted from a plan, indexed by node id:
///   x(i,j) — POD i belongs to the route seeded by fPOD j
///   s(j,k) — seed j's route links j to node k (POD or RSS neighbour)
///   y(i,j) — PODs i < j are adjacent on some route
struct AssignmentMatrix {
    std::size_t n = 0;
    std::vector<std::uint8_t> x_, s_, y_;

    explicit AssignmentMatrix(std::size_t size)
        : n(size), x_(size * size, 0), s_(size * size, 0), y_(size * size, 0) {}

    std::uint8_t x(NodeId i, NodeId j) const { return x_[idx(i, j)]; }
    std::uint8_t s(NodeId j, NodeId k) const { return s_[idx(j, k)]; }
    std::uint8_t y(NodeId i, NodeId j) const { return i < j ? y_[idx(i, j)] : 0; }

    void set_x(NodeId i, NodeId j) { x_[idx(i, j)] = 1; }
    void set_s(NodeId j, NodeId k) { s_[idx(j, k)] = 1; }
    void set_y(NodeId i, NodeId j);  // stores under (min, max), i != j

    std::size_t idx(NodeId i, NodeId j) const {
        return static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
    }
};

/// The pair of PODs at maximum distance; ties resolved to the
/// lexicographically smallest (min id, max id) pair.
std::pair<NodeId, NodeId> farthest_pair(const std::vector<NodeId>& pods,
                                        const DistanceMatrix& dist);

/// Grow two chains from the seeds. Each step, every chain proposes its
/// nearest unassigned POD measured from its grow end (ties: lowest POD id)
/// and the globally cheaper attachment wins (ties: first chain).
std::pair<Chain, Chain> grow_chains(const std::vector<NodeId>& pods,
                                    std::pair<NodeId, NodeId> seeds,
                                    const DistanceMatrix& dist);

/// Anchor a chain to the depot minimizing endpoint-to-RSS distance over
/// both endpoints and all RSS sites (ties: lower RSS id, then the seed
/// endpoint). The route starts at that depot, runs from the chosen
/// endpoint to the opposite one, and stays open (no return leg).
Route attach_rss(const Chain& chain, const Instance& instance,
                 const DistanceMatrix& dist, const SolverParams& params);

/// Split every route whose total_time exceeds T_l: dissolve it, re-seed
/// its POD set via farthest_pair + grow_chains + attach_rss, and recurse
/// until every route complies. A violating singleton is infeasible.
std::vector<Route> enforce_time(const std::vector<Route>& routes,
                                const Instance& instance,
                                const DistanceMatrix& dist,
                                const SolverParams& params);

/// For each route above capacity, walk the sequence from the endpoint
/// farthest from its depot, keep the maximal prefix of that walk within
/// capacity (preserving anchor and order), and pool the remaining PODs.
std::pair<std::vector<Route>, std::vector<NodeId>> trim_capacity(
    const std::vector<Route>& routes, const Instance& instance,
    const DistanceMatrix& dist, const SolverParams& params);

/// Full pipeline: seed, grow, attach, enforce time, trim for capacity.
/// The trimmed PODs are connected into one new route that re-enters the
/// compliance steps, until no trimming occurs. Deterministic for fixed
/// input.
Plan solve(const Instance& instance, const SolverParams& params);

/// Link indicators of a solved plan (diagnostic companion to the plan).
AssignmentMatrix assignment_from_plan(const Plan& plan, const Instance& instance);

/// Literal evaluation of the construction objective
///   sum_i sum_j ( x(i,j) d(i,j) + sum_k s(j,k) y(i,k) d(i,k) )
/// over all node ids. Diagnostic only; the heuristic is constructive.
double objective_value(const AssignmentMatrix& assignment, const DistanceMatrix& dist);

}  // namespace rss
