#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rss/evaluate.hpp"
#include "rss/io.hpp"
#include "rss/model.hpp"
#include "rss/oracle.hpp"
#include "rss/solver.hpp"

namespace {

using nlohmann::json;
using namespace rss;

struct Overrides {
    std::optional<double> max_cost;
    std::optional<long long> capacity;
    double service_time = 0.0;
    double speed = 1.0;
};

SolverParams make_params(const Instance& instance, const Overrides& o) {
    auto params = params_from_instance(instance);
    if (o.max_cost) params.max_route_time = *o.max_cost;
    if (o.capacity) params.capacity = *o.capacity;
    params.service_time_per_stop = o.service_time;
    params.speed = o.speed;
    params.validate();
    return params;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file " + path);
    return parse_instance(in, instance_name_from_path(path));
}

SolutionFile load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file " + path);
    return parse_solution(in);
}

/// Primary output goes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot write " + out_path);
    out << text;
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

std::string orientation_of(const Route& route) {
    return route.pod_sequence.front() == route.seed_pod ? "seed-first" : "seed-last";
}

std::string stats_block(const Plan& plan, const Instance& instance,
                        const DistanceMatrix& dist) {
    const auto stats = plan_stats(plan, dist);
    const double objective = objective_value(assignment_from_plan(plan, instance), dist);
    std::string out;
    out += "Routes: " + std::to_string(stats.route_count) + "\n";
    out += "Max route cost: " + format_fixed(stats.max_route_cost) + "\n";
    out += "Mean route cost: " + format_fixed(stats.mean_route_cost) + "\n";
    out += "Cost range: " + format_fixed(stats.cost_range) + "\n";
    out += "Total cost: " + format_fixed(stats.total_cost) + "\n";
    out += "Objective value: " + format_fixed(objective) + "\n";
    return out;
}

std::string plan_csv(const Plan& plan) {
    std::string out = "route,rss,orientation,cost,demand,pods\n";
    int i = 0;
    for (const auto& r : plan.routes) {
        out += std::to_string(++i) + "," + std::to_string(r.rss_id) + "," + orientation_of(r) +
               "," + format_fixed(r.total_time) + "," + std::to_string(r.total_demand) + ",";
        for (std::size_t k = 0; k < r.pod_sequence.size(); ++k)
            out += (k ? " " : "") + std::to_string(r.pod_sequence[k]);
        out += "\n";
    }
    return out;
}

std::string plan_structured(const Plan& plan, const Instance& instance,
                            const DistanceMatrix& dist) {
    const auto stats = plan_stats(plan, dist);
    json doc;
    doc["instance"] = plan.instance_name;
    doc["params"] = {{"capacity", plan.params_used.capacity},
                     {"max_route_time", plan.params_used.max_route_time},
                     {"service_time_per_stop", plan.params_used.service_time_per_stop},
                     {"speed", plan.params_used.speed}};
    doc["routes"] = json::array();
    int i = 0;
    for (const auto& r : plan.routes)
        doc["routes"].push_back({{"route", ++i},
                                 {"rss", r.rss_id},
                                 {"seed", r.seed_pod},
                                 {"orientation", orientation_of(r)},
                                 {"cost", round3(r.total_time)},
                                 {"demand", r.total_demand},
                                 {"pods", r.pod_sequence}});
    doc["stats"] = {{"route_count", stats.route_count},
                    {"max_route_cost", round3(stats.max_route_cost)},
                    {"mean_route_cost", round3(stats.mean_route_cost)},
                    {"cost_range", round3(stats.cost_range)},
                    {"total_cost", round3(stats.total_cost)}};
    doc["objective_value"] = round3(objective_value(assignment_from_plan(plan, instance), dist));
    return doc.dump(2) + "\n";
}

int cmd_solve(const std::string& instance_path, const Overrides& o,
              const std::string& format, const std::string& out_path) {
    const auto instance = load_instance(instance_path);
    const auto params = make_params(instance, o);
    const auto plan = solve(instance, params);
    const auto dist = build_distance_matrix(instance);

    std::string primary;
    if (format == "csv")
        primary = plan_csv(plan);
    else if (format == "structured")
        primary = plan_structured(plan, instance, dist);
    else
        primary = write_plan(plan);
    emit(out_path, primary);
    std::cout << stats_block(plan, instance, dist);
    return 0;
}

int cmd_cost(const std::string& instance_path, const std::string& solution_path,
             const Overrides& o) {
    const auto instance = load_instance(instance_path);
    auto params = make_params(instance, o);
    const auto solution = load_solution(solution_path);
    validate_solution_ids(solution, instance);

    const auto dist = build_distance_matrix(instance);
    const NodeId rss = instance.rss_sites.front().id;

    std::map<NodeId, long long> demand;
    for (const auto& p : instance.pods) demand[p.id] = p.demand;

    double total_open = 0.0, total_closed = 0.0, max_cost = 0.0;
    int i = 0;
    for (const auto& seq : solution.routes) {
        const double cost = route_cost(seq, rss, dist, params);
        long long load = 0;
        for (NodeId id : seq) load += demand.at(id);
        std::cout << "Route " << ++i << ": cost " << format_fixed(cost) << " demand " << load
                  << "\n";
        total_open += cost;
        total_closed += route_cost_closed(seq, rss, dist, params);
        max_cost = std::max(max_cost, cost);
    }
    std::cout << "Max route cost: " << format_fixed(max_cost) << "\n";
    std::cout << "Total cost (open): " << format_fixed(total_open) << "\n";
    std::cout << "Total cost (closed): " << format_fixed(total_closed) << "\n";
    std::cout << "Declared cost: " << format_fixed(solution.declared_cost) << "\n";
    return 0;
}

constexpr const char* kReportHeader = "instance,input_max_cost,gen_routes,gen_max_cost,best_k,difference";

std::string comparison_csv_row(const ComparisonRow& row) {
    return row.instance + "," + format_fixed(row.input_max_cost) + "," +
           std::to_string(row.generated_route_count) + "," +
           format_fixed(row.generated_max_cost) + "," + std::to_string(row.best_known_k) + "," +
           std::to_string(row.difference);
}

ComparisonRow build_row(const Instance& instance, const SolverParams& params,
                        const Plan& plan, const DistanceMatrix& dist, int best_k) {
    ComparisonRow row;
    row.instance = instance.name;
    row.input_max_cost = params.max_route_time;
    row.generated_route_count = static_cast<int>(plan.routes.size());
    row.generated_max_cost = plan_stats(plan, dist).max_route_cost;
    row.best_known_k = best_k;
    row.difference = row.generated_route_count - best_k;
    return row;
}

int cmd_compare(const std::string& instance_path, const std::string& solution_path,
                const Overrides& o, const std::string& out_path) {
    const auto instance = load_instance(instance_path);
    const auto params = make_params(instance, o);
    const auto solution = load_solution(solution_path);
    validate_solution_ids(solution, instance);

    const auto plan = solve(instance, params);
    const auto dist = build_distance_matrix(instance);
    const auto row =
        build_row(instance, params, plan, dist, static_cast<int>(solution.routes.size()));
    emit(out_path, std::string(kReportHeader) + "\n" + comparison_csv_row(row) + "\n");
    return 0;
}

int cmd_sweep(const std::string& instance_path, double from, double to, double step,
              const Overrides& o, const std::string& out_path) {
    if (step <= 0.0) throw ConfigError("--step must be positive");
    if (from > to) throw ConfigError("--from must not exceed --to");
    const auto instance = load_instance(instance_path);

    std::string out = "t_l,routes,max_cost,status\n";
    for (int i = 0;; ++i) {
        const double tl = from + step * i;
        if (tl > to + 1e-9) break;
        Overrides point = o;
        point.max_cost = tl;
        const auto params = make_params(instance, point);
        try {
            const auto plan = solve(instance, params);
            const auto dist = build_distance_matrix(instance);
            out += format_fixed(tl) + "," + std::to_string(plan.routes.size()) + "," +
                   format_fixed(plan_stats(plan, dist).max_route_cost) + ",ok\n";
        } catch (const InfeasibleError&) {
            out += format_fixed(tl) + ",,,infeasible\n";
        }
    }
    emit(out_path, out);
    return 0;
}

struct ManifestEntry {
    std::string instance_path;
    std::string solution_path;  // may be empty
    std::optional<double> max_cost;
};

std::vector<ManifestEntry> parse_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest " + path);
    const auto base = std::filesystem::path(path).parent_path();

    std::vector<ManifestEntry> entries;
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!saw_header) {
            if (line != "instance,solution,max_cost")
                throw ParseError("manifest header must be \"instance,solution,max_cost\"",
                                 line_no);
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        fields.resize(3);
        ManifestEntry e;
        e.instance_path = (base / fields[0]).string();
        if (!fields[1].empty()) e.solution_path = (base / fields[1]).string();
        if (!fields[2].empty()) {
            try {
                std::size_t used = 0;
                e.max_cost = std::stod(fields[2], &used);
                if (used != fields[2].size()) throw std::invalid_argument(fields[2]);
            } catch (const std::exception&) {
                throw ParseError("bad max_cost \"" + fields[2] + "\"", line_no);
            }
        }
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw ParseError("manifest has no entries");
    return entries;
}

int cmd_batch(const std::string& manifest_path, const Overrides& o,
              const std::string& out_path) {
    const auto entries = parse_manifest(manifest_path);

    std::string out = std::string(kReportHeader) + "\n";
    std::vector<ComparisonRow> rows_with_k;
    int succeeded = 0;
    for (const auto& e : entries) {
        const auto name = instance_name_from_path(e.instance_path);
        try {
            const auto instance = load_instance(e.instance_path);
            Overrides point = o;
            if (e.max_cost) point.max_cost = e.max_cost;
            const auto params = make_params(instance, point);
            const auto plan = solve(instance, params);
            const auto dist = build_distance_matrix(instance);

            if (!e.solution_path.empty()) {
                const auto solution = load_solution(e.solution_path);
                validate_solution_ids(solution, instance);
                const auto row = build_row(instance, params, plan, dist,
                                           static_cast<int>(solution.routes.size()));
                out += comparison_csv_row(row) + "\n";
                rows_with_k.push_back(row);
            } else {
                // No best-known solution: report the plan, omit the
                // comparison columns.
                const auto stats = plan_stats(plan, dist);
                out += name + "," + format_fixed(params.max_route_time) + "," +
                       std::to_string(plan.routes.size()) + "," +
                       format_fixed(stats.max_route_cost) + ",,\n";
            }
            ++succeeded;
        } catch (const Error& err) {
            std::cerr << "batch: " << name << ": " << err.what() << "\n";
            out += name + ",,,,,\n";
        }
    }
    out += "average_difference,";
    if (!rows_with_k.empty()) out += format_fixed(average_difference(rows_with_k));
    out += "\n";

    emit(out_path, out);
    if (succeeded == 0) throw ParseError("no manifest entry could be processed");
    return 0;
}

int cmd_oracle(const std::string& instance_path, const Overrides& o) {
    const auto instance = load_instance(instance_path);
    const auto params = make_params(instance, o);
    const auto result = min_routes_bruteforce(instance, params);
    if (!result.feasible) {
        std::cout << "infeasible: no compliant plan exists\n";
        return 3;
    }
    std::cout << "min_routes: " << result.min_route_count << "\n";
    std::cout << "explored: " << result.explored_count << "\n";
    std::cout << write_plan(result.witness_plan);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open-route delivery planner for staged medical stockpile dispensing"};
    app.require_subcommand(1);

    Overrides o;
    std::string instance_path, solution_path, manifest_path, out_path;
    std::string format = "text";
    double from = 0.0, to = 0.0, step = 1.0;

    auto add_overrides = [&](CLI::App* cmd, bool with_max_cost) {
        if (with_max_cost)
            cmd->add_option("--max-cost", o.max_cost, "Override the instance's max route time");
        cmd->add_option("--capacity", o.capacity, "Override the instance's vehicle capacity");
        cmd->add_option("--service-time", o.service_time, "Service time added per stop");
        cmd->add_option("--speed", o.speed, "Travel speed divisor");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Construct a compliant delivery plan");
    solve_cmd->add_option("instance", instance_path, "Instance file")->required();
    add_overrides(solve_cmd, true);
    solve_cmd->add_option("--format", format, "Output format: text, csv or structured")
        ->check(CLI::IsMember({"text", "csv", "structured"}));
    solve_cmd->add_option("--out", out_path, "Write the plan to a file");

    auto* cost_cmd = app.add_subcommand("cost", "Score a solution file against its instance");
    cost_cmd->add_option("instance", instance_path, "Instance file")->required();
    cost_cmd->add_option("solution", solution_path, "Solution file")->required();
    add_overrides(cost_cmd, false);

    auto* compare_cmd =
        app.add_subcommand("compare", "Solve and compare against a best-known solution");
    compare_cmd->add_option("instance", instance_path, "Instance file")->required();
    compare_cmd->add_option("solution", solution_path, "Best-known solution file")->required();
    add_overrides(compare_cmd, true);
    compare_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* sweep_cmd = app.add_subcommand("sweep", "Solve across a grid of time limits");
    sweep_cmd->add_option("instance", instance_path, "Instance file")->required();
    sweep_cmd->add_option("--from", from, "First time limit")->required();
    sweep_cmd->add_option("--to", to, "Last time limit")->required();
    sweep_cmd->add_option("--step", step, "Grid step")->required();
    add_overrides(sweep_cmd, false);
    sweep_cmd->add_option("--out", out_path, "Write the table to a file");

    auto* batch_cmd = app.add_subcommand("batch", "Run a manifest of instances");
    batch_cmd->add_option("manifest", manifest_path, "Manifest CSV")->required();
    add_overrides(batch_cmd, false);
    batch_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "Exact minimum route count (small instances)");
    oracle_cmd->add_option("instance", instance_path, "Instance file")->required();
    add_overrides(oracle_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(instance_path, o, format, out_path);
        if (cost_cmd->parsed()) return cmd_cost(instance_path, solution_path, o);
        if (compare_cmd->parsed()) return cmd_compare(instance_path, solution_path, o, out_path);
        if (sweep_cmd->parsed()) return cmd_sweep(instance_path, from, to, step, o, out_path);
        if (batch_cmd->parsed()) return cmd_batch(manifest_path, o, out_path);
        if (oracle_cmd->parsed()) return cmd_oracle(instance_path, o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
