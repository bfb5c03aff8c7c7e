#pragma once

#include "rss/model.hpp"

namespace rss {

/// Knobs shared by the solver and every cost computation.
struct SolverParams {
    long long capacity = 0;                // vehicle demand limit, > 0
    double max_route_time = 0.0;           // T_l, > 0
    double service_time_per_stop = 0.0;    // >= 0, added per visited POD
    double speed = 1.0;                    // > 0; time = distance / speed
    int max_outer_iterations = 1000;       // safety cap on re-route passes

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Params carrying the instance's own capacity and time limit.
SolverParams params_from_instance(const Instance& instance);

}  // namespace rss
