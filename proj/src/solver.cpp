#include "rss/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rss/evaluate.hpp"

namespace rss {

namespace {

std::map<NodeId, long long> demand_by_id(const Instance& instance) {
    std::map<NodeId, long long> m;
    for (const auto& p : instance.pods) m[p.id] = p.demand;
    return m;
}

Route make_route(std::vector<NodeId> sequence, NodeId rss_id, NodeId seed_pod,
                 const Instance& instance, const DistanceMatrix& dist,
                 const SolverParams& params) {
    Route r;
    r.pod_sequence = std::move(sequence);
    r.rss_id = rss_id;
    r.seed_pod = seed_pod;
    r.total_time = route_cost(r.pod_sequence, rss_id, dist, params);
    const auto demand = demand_by_id(instance);
    for (NodeId id : r.pod_sequence) r.total_demand += demand.at(id);
    return r;
}

std::vector<NodeId> sorted_ids(std::vector<NodeId> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

/// Trimmed PODs are connected into a single new route. The chain starts
/// at the POD farthest from every depot (mirroring the trim walk, which
/// pools the depot-near leftovers) and extends nearest-first from the
/// grow end; ascending scans keep the lowest id on ties.
Chain pool_chain(const std::vector<NodeId>& pool, const Instance& instance,
                 const DistanceMatrix& dist) {
    const auto ids = sorted_ids(pool);
    auto depot_gap = [&](NodeId id) {
        double best = dist(id, instance.rss_sites.front().id);
        for (const auto& rss : instance.rss_sites) best = std::min(best, dist(id, rss.id));
        return best;
    };
    NodeId start = ids.front();
    double start_gap = depot_gap(start);
    for (NodeId id : ids) {
        const double gap = depot_gap(id);
        if (gap > start_gap) {
            start_gap = gap;
            start = id;
        }
    }

    Chain chain{{start}};
    std::vector<NodeId> rest;
    for (NodeId id : ids)
        if (id != start) rest.push_back(id);
    while (!rest.empty()) {
        std::size_t pick = 0;
        double pick_d = dist(chain.grow_end(), rest[0]);
        for (std::size_t i = 1; i < rest.size(); ++i) {
            const double d = dist(chain.grow_end(), rest[i]);
            if (d < pick_d) {
                pick_d = d;
                pick = i;
            }
        }
        chain.pods.push_back(rest[pick]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return chain;
}

}  // namespace

void AssignmentMatrix::set_y(NodeId i, NodeId j) {
    if (i == j) throw ValidationError("Y links join distinct PODs");
    y_[idx(std::min(i, j), std::max(i, j))] = 1;
}

std::pair<NodeId, NodeId> farthest_pair(const std::vector<NodeId>& pods,
                                        const DistanceMatrix& dist) {
    if (pods.size() < 2) throw ValidationError("farthest_pair needs at least 2 PODs");
    const auto ids = sorted_ids(pods);
    // Ascending scan visits pairs in lexicographic order, so keeping only
    // strict improvements realizes the smallest-pair tie rule.
    std::pair<NodeId, NodeId> best{ids[0], ids[1]};
    double best_d = -1.0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const double d = dist(ids[i], ids[j]);
            if (d > best_d) {
                best_d = d;
                best = {ids[i], ids[j]};
            }
        }
    return best;
}

std::pair<Chain, Chain> grow_chains(const std::vector<NodeId>& pods,
                                    std::pair<NodeId, NodeId> seeds,
                                    const DistanceMatrix& dist) {
    const auto ids = sorted_ids(pods);
    if (seeds.first == seeds.second) throw ValidationError("chain seeds must be distinct");
    for (NodeId s : {seeds.first, seeds.second})
        if (!std::binary_search(ids.begin(), ids.end(), s))
            throw ValidationError("seed " + std::to_string(s) + " is not in the POD set");

    Chain first{{seeds.first}};
    Chain second{{seeds.second}};
    std::vector<NodeId> unassigned;
    for (NodeId id : ids)
        if (id != seeds.first && id != seeds.second) unassigned.push_back(id);

    while (!unassigned.empty()) {
        // Each chain proposes its nearest unassigned POD measured from its
        // grow end; the ascending scan keeps the lowest id on distance ties.
        auto propose = [&](const Chain& chain) {
            std::size_t best = 0;
            double best_d = dist(chain.grow_end(), unassigned[0]);
            for (std::size_t i = 1; i < unassigned.size(); ++i) {
                const double d = dist(chain.grow_end(), unassigned[i]);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            return std::make_pair(best_d, best);
        };
        const auto [d1, i1] = propose(first);
        const auto [d2, i2] = propose(second);
        // The globally cheaper attachment wins; the first chain wins ties.
        Chain& winner = d1 <= d2 ? first : second;
        const std::size_t pick = d1 <= d2 ? i1 : i2;
        winner.pods.push_back(unassigned[pick]);
        unassigned.erase(unassigned.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return {first, second};
}

Route attach_rss(const Chain& chain, const Instance& instance,
                 const DistanceMatrix& dist, const SolverParams& params) {
    if (chain.pods.empty()) throw ValidationError("cannot attach an empty chain");
    if (instance.rss_sites.empty()) throw ConfigError("instance has no RSS site");

    std::vector<NodeId> rss_ids;
    for (const auto& r : instance.rss_sites) rss_ids.push_back(r.id);
    std::sort(rss_ids.begin(), rss_ids.end());

    // Scan RSS sites in id order and the seed endpoint before the grow end:
    // strict improvement then realizes the lower-RSS-id / seed-endpoint tie
    // rule directly.
    NodeId best_rss = rss_ids.front();
    bool start_at_seed = true;
    double best_d = dist(chain.seed_end(), best_rss);
    for (NodeId rss : rss_ids)
        for (bool at_seed : {true, false}) {
            const NodeId endpoint = at_seed ? chain.seed_end() : chain.grow_end();
            const double d = dist(endpoint, rss);
            if (d < best_d) {
                best_d = d;
                best_rss = rss;
                start_at_seed = at_seed;
            }
        }

    std::vector<NodeId> sequence = chain.pods;
    if (!start_at_seed) std::reverse(sequence.begin(), sequence.end());
    return make_route(std::move(sequence), best_rss, chain.seed_end(), instance, dist, params);
}

std::vector<Route> enforce_time(const std::vector<Route>& routes, const Instance& instance,
                                const DistanceMatrix& dist, const SolverParams& params) {
    std::vector<Route> compliant;
    std::deque<Route> pending(routes.begin(), routes.end());
    while (!pending.empty()) {
        Route route = std::move(pending.front());
        pending.pop_front();
        if (route.total_time <= params.max_route_time + kTimeEps) {
            compliant.push_back(std::move(route));
            continue;
        }
        if (route.pod_sequence.size() == 1)
            throw InfeasibleError("POD " + std::to_string(route.pod_sequence.front()) +
                                  " cannot be served within the time limit (needs " +
                                  std::to_string(route.total_time) + ", limit " +
                                  std::to_string(params.max_route_time) + ")");
        // Dissolve the route and re-seed its POD set from scratch.
        const auto seeds = farthest_pair(route.pod_sequence, dist);
        const auto [one, two] = grow_chains(route.pod_sequence, seeds, dist);
        // Depth-first re-checking keeps each split resolved in place, so
        // the output preserves the order of the original routes.
        pending.push_front(attach_rss(two, instance, dist, params));
        pending.push_front(attach_rss(one, instance, dist, params));
    }
    return compliant;
}

std::pair<std::vector<Route>, std::vector<NodeId>> trim_capacity(
    const std::vector<Route>& routes, const Instance& instance, const DistanceMatrix& dist,
    const SolverParams& params) {
    const auto demand = demand_by_id(instance);
    std::vector<Route> kept;
    std::vector<NodeId> pool;
    for (const auto& route : routes) {
        if (route.total_demand <= params.capacity) {
            kept.push_back(route);
            continue;
        }
        const auto& seq = route.pod_sequence;
        // Walk from the endpoint farthest from the depot (the sequence tail
        // for attach_rss-built routes) and keep the maximal affordable
        // prefix of that walk, preserving anchor and traversal order.
        const bool from_tail =
            dist(route.rss_id, seq.back()) >= dist(route.rss_id, seq.front());
        std::vector<std::size_t> walk(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i)
            walk[i] = from_tail ? seq.size() - 1 - i : i;

        long long load = 0;
        std::size_t taken = 0;
        for (; taken < walk.size(); ++taken) {
            const long long d = demand.at(seq[walk[taken]]);
            if (load + d > params.capacity) break;
            load += d;
        }
        if (taken == 0)
            throw InfeasibleError("POD " + std::to_string(seq[walk[0]]) +
                                  " demand exceeds vehicle capacity");

        std::vector<std::uint8_t> keep_at(seq.size(), 0);
        for (std::size_t i = 0; i < taken; ++i) keep_at[walk[i]] = 1;
        std::vector<NodeId> kept_seq, dropped;
        for (std::size_t i = 0; i < seq.size(); ++i)
            (keep_at[i] ? kept_seq : dropped).push_back(seq[i]);

        const bool seed_kept =
            std::find(kept_seq.begin(), kept_seq.end(), route.seed_pod) != kept_seq.end();
        const NodeId seed = seed_kept ? route.seed_pod : kept_seq.front();
        kept.push_back(make_route(std::move(kept_seq), route.rss_id, seed, instance, dist, params));
        pool.insert(pool.end(), dropped.begin(), dropped.end());
    }
    std::sort(pool.begin(), pool.end());
    return {std::move(kept), std::move(pool)};
}

Plan solve(const Instance& instance, const SolverParams& params) {
    instance.validate();
    params.validate();
    // The instance validates demands against its own capacity; an override
    // must be re-checked or trimming could never terminate.
    for (const auto& p : instance.pods)
        if (p.demand > params.capacity)
            throw InfeasibleError("POD " + std::to_string(p.id) + " demand " +
                                  std::to_string(p.demand) + " exceeds capacity " +
                                  std::to_string(params.capacity));

    const auto dist = build_distance_matrix(instance);

    Plan plan;
    plan.instance_name = instance.name;
    plan.params_used = params;

    std::vector<NodeId> pool;
    for (const auto& p : instance.pods) pool.push_back(p.id);
    std::sort(pool.begin(), pool.end());

    int iterations = 0;
    while (!pool.empty()) {
        if (++iterations > params.max_outer_iterations)
            throw LimitError("route construction exceeded " +
                             std::to_string(params.max_outer_iterations) + " passes");
        std::vector<Route> routes;
        if (iterations == 1 && pool.size() >= 2) {
            // Initial bisection of the full POD set into two seeded chains.
            const auto seeds = farthest_pair(pool, dist);
            const auto [one, two] = grow_chains(pool, seeds, dist);
            routes.push_back(attach_rss(one, instance, dist, params));
            routes.push_back(attach_rss(two, instance, dist, params));
        } else {
            // Later passes: the trimmed pool is connected into one new
            // route, which re-enters the compliance checks below.
            routes.push_back(attach_rss(pool_chain(pool, instance, dist), instance, dist,
                                        params));
        }
        routes = enforce_time(routes, instance, dist, params);
        auto [kept, trimmed] = trim_capacity(routes, instance, dist, params);
        plan.routes.insert(plan.routes.end(), kept.begin(), kept.end());
        pool = std::move(trimmed);
    }
    return plan;
}

AssignmentMatrix assignment_from_plan(const Plan& plan, const Instance& instance) {
    NodeId max_id = 0;
    for (const auto& r : instance.rss_sites) max_id = std::max(max_id, r.id);
    for (const auto& p : instance.pods) max_id = std::max(max_id, p.id);

    AssignmentMatrix a(static_cast<std::size_t>(max_id) + 1);
    for (const auto& route : plan.routes) {
        const auto& seq = route.pod_sequence;
        const NodeId seed = route.seed_pod;
        for (NodeId id : seq) a.set_x(id, seed);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) a.set_y(seq[i], seq[i + 1]);
        // The seed's own links, including the depot leg when it opens the route.
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != seed) continue;
            a.set_s(seed, i == 0 ? route.rss_id : seq[i - 1]);
            if (i + 1 < seq.size()) a.set_s(seed, seq[i + 1]);
        }
    }
    return a;
}

double objective_value(const AssignmentMatrix& assignment, const DistanceMatrix& dist) {
    const auto n = static_cast<NodeId>(assignment.n);
    double value = 0.0;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) {
            if (assignment.x(i, j)) value += dist(i, j);
            for (NodeId k = 0; k < n; ++k)
                if (assignment.s(j, k) && assignment.y(i, k)) value += dist(i, k);
        }
    return value;
}

}  // namespace rss
