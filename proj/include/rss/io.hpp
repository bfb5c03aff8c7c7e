#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rss/model.hpp"
#include "rss/solver.hpp"

namespace rss {

/// A parsed best-known solution file.
struct SolutionFile {
    std::vector<std::vector<NodeId>> routes;  // file order, ids in sequence order
    double declared_cost = 0.0;               // trailing "Cost:" value
};

/// Instance file: line 1 "x y 0" (depot; third value discarded), then one
/// "x y demand" line per POD, then a "capacity max_route_time" footer.
/// POD ids are assigned 1..n-1 in file order, the depot gets id 0, and
/// known_k is read from a "-k<count>" suffix of `name` when present.
Instance parse_instance(std::istream& text, const std::string& name);
Instance parse_instance_text(const std::string& text, const std::string& name);

/// Inverse of parse_instance; numbers are written shortest-round-trip so
/// reparsing reproduces the instance exactly.
std::string serialize_instance(const Instance& instance);

/// Solution file: "Route #<i>: <ids...>" lines followed by "Cost: <value>".
/// A POD id appearing twice is a validation error; a missing Cost line is
/// a parse error.
SolutionFile parse_solution(std::istream& text);
SolutionFile parse_solution_text(const std::string& text);

/// Plan text: "Route #i: <ids>" per route plus "Cost: <total>" with the
/// total rounded to 3 decimals. Byte-deterministic; an empty plan is just
/// the cost line.
std::string write_plan(const Plan& plan);

/// Fixed-point formatting used for every cost the artifact prints.
std::string format_fixed(double value, int decimals = 3);

/// Shortest decimal form that parses back to exactly `value`.
std::string format_roundtrip(double value);

/// "path/E-n22-k4.txt" -> "E-n22-k4".
std::string instance_name_from_path(const std::string& path);

/// Ids a solution may use against this instance are 1..|pods|; anything
/// else is a validation error naming the offending id.
void validate_solution_ids(const SolutionFile& solution, const Instance& instance);

}  // namespace rss
