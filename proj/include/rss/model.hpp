#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rss/errors.hpp"

namespace rss {

/// Node identifier. The RSS depot of a parsed instance is 0, PODs are
/// 1..n-1 in file order; synthetic instances follow the same dense scheme.
using NodeId = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Demand node: a point of dispensing with a population-derived demand.
struct Pod {
    NodeId id = 0;
    Point location;
    long long demand = 0;  // population units, nonnegative
};

/// Supply depot: receiving/staging/storage site vehicles depart from.
/// Routes are anchored here and do not return (open routes).
struct Rss {
    NodeId id = 0;
    Point location;
};

/// One delivery problem: depot sites, demand nodes, and the two limits.
struct Instance {
    std::string name;
    std::vector<Rss> rss_sites;    // nonempty, ordered
    std::vector<Pod> pods;         // nonempty, ordered
    long long capacity = 0;        // per-vehicle demand limit, > 0
    double max_route_time = 0.0;   // per-route time limit T_l, > 0
    std::optional<int> known_k;    // best-known route count from "-k" suffix

    /// Throws ValidationError / InfeasibleError / ConfigError when an
    /// invariant is broken. Parsed instances are always validated.
    void validate() const;
};

/// Dense symmetric matrix of real-valued Euclidean distances, indexed by
/// node id. Only ids present in the source instance are addressable.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t size, const std::vector<NodeId>& known_ids);

    double operator()(NodeId i, NodeId j) const {
        check(i);
        check(j);
        return d_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }

    void set(NodeId i, NodeId j, double value) {
        d_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] = value;
    }

    std::size_t size() const { return n_; }

  private:
    void check(NodeId i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= n_ || !known_[static_cast<std::size_t>(i)])
            throw ValidationError("unknown node id " + std::to_string(i));
    }

    std::size_t n_ = 0;
    std::vector<double> d_;
    std::vector<std::uint8_t> known_;
};

/// Planar Euclidean distance; exact and symmetric, never pre-rounded.
double euclidean_distance(const Point& a, const Point& b);

/// Pairwise distances over all RSS sites and PODs of the instance.
DistanceMatrix build_distance_matrix(const Instance& instance);

}  // namespace rss
