#include "rss/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace rss {

namespace {

struct Line {
    int number = 0;  // 1-based position in the input
    std::string text;
};

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<Line> non_blank_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (raw.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        out.push_back({no, raw});
    }
    return out;
}

std::optional<double> to_double(const std::string& tok) {
    double v = 0.0;
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end) return std::nullopt;
    return v;
}

std::optional<long long> to_integer(const std::string& tok) {
    long long v = 0;
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end) return std::nullopt;
    return v;
}

double need_double(const std::string& tok, int line, const char* what) {
    auto v = to_double(tok);
    if (!v) throw ParseError(std::string("expected numeric ") + what + ", got \"" + tok + "\"", line);
    return *v;
}

long long need_integer(const std::string& tok, int line, const char* what) {
    auto v = to_integer(tok);
    if (!v) throw ParseError(std::string("expected integer ") + what + ", got \"" + tok + "\"", line);
    return *v;
}

}  // namespace

Instance parse_instance(std::istream& text, const std::string& name) {
    const auto lines = non_blank_lines(text);
    if (lines.size() < 3)
        throw ParseError("instance needs a depot line, at least one POD line and a footer");

    Instance inst;
    inst.name = name;

    {  // depot: "x y <marker>"; the marker is accepted and discarded
        const auto toks = tokenize(lines.front().text);
        if (toks.size() != 3)
            throw ParseError("depot line must have 3 fields", lines.front().number);
        Rss rss;
        rss.id = 0;
        rss.location.x = need_double(toks[0], lines.front().number, "coordinate");
        rss.location.y = need_double(toks[1], lines.front().number, "coordinate");
        need_double(toks[2], lines.front().number, "marker");
        inst.rss_sites.push_back(rss);
    }

    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {  // PODs: "x y demand"
        const auto toks = tokenize(lines[i].text);
        if (toks.size() != 3)
            throw ParseError("POD line must have 3 fields", lines[i].number);
        Pod pod;
        pod.id = static_cast<NodeId>(i);
        pod.location.x = need_double(toks[0], lines[i].number, "coordinate");
        pod.location.y = need_double(toks[1], lines[i].number, "coordinate");
        pod.demand = need_integer(toks[2], lines[i].number, "demand");
        inst.pods.push_back(pod);
    }

    {  // footer: "capacity max_route_time"
        const auto toks = tokenize(lines.back().text);
        if (toks.size() != 2)
            throw ParseError("footer must be \"capacity max_route_time\"", lines.back().number);
        inst.capacity = need_integer(toks[0], lines.back().number, "capacity");
        inst.max_route_time = need_double(toks[1], lines.back().number, "max route time");
    }

    std::smatch m;
    if (std::regex_search(name, m, std::regex("-k(\\d+)")))
        inst.known_k = std::stoi(m[1].str());

    inst.validate();
    return inst;
}

Instance parse_instance_text(const std::string& text, const std::string& name) {
    std::istringstream is(text);
    return parse_instance(is, name);
}

std::string serialize_instance(const Instance& instance) {
    std::string out;
    for (const auto& r : instance.rss_sites)
        out += format_roundtrip(r.location.x) + " " + format_roundtrip(r.location.y) + " 0\n";
    for (const auto& p : instance.pods)
        out += format_roundtrip(p.location.x) + " " + format_roundtrip(p.location.y) + " " +
               std::to_string(p.demand) + "\n";
    out += std::to_string(instance.capacity) + " " + format_roundtrip(instance.max_route_time) + "\n";
    return out;
}

SolutionFile parse_solution(std::istream& text) {
    static const std::regex route_re("^\\s*Route\\s+#(\\d+)\\s*:(.*)$");
    static const std::regex cost_re("^\\s*Cost\\s*:\\s*(\\S+)\\s*$");

    SolutionFile sol;
    std::set<NodeId> seen;
    bool have_cost = false;
    for (const auto& line : non_blank_lines(text)) {
        std::smatch m;
        if (have_cost)
            throw ParseError("content after Cost line", line.number);
        if (std::regex_match(line.text, m, route_re)) {
            const auto toks = tokenize(m[2].str());
            if (toks.empty()) throw ParseError("route has no PODs", line.number);
            std::vector<NodeId> route;
            for (const auto& tok : toks) {
                const auto id = need_integer(tok, line.number, "POD id");
                if (id <= 0)
                    throw ValidationError("invalid POD id " + tok + " on line " +
                                          std::to_string(line.number));
                if (!seen.insert(static_cast<NodeId>(id)).second)
                    throw ValidationError("POD " + tok + " appears in more than one position");
                route.push_back(static_cast<NodeId>(id));
            }
            sol.routes.push_back(std::move(route));
        } else if (std::regex_match(line.text, m, cost_re)) {
            sol.declared_cost = need_double(m[1].str(), line.number, "cost");
            have_cost = true;
        } else {
            throw ParseError("expected \"Route #i: ...\" or \"Cost: ...\"", line.number);
        }
    }
    if (!have_cost) throw ParseError("missing Cost line");
    return sol;
}

SolutionFile parse_solution_text(const std::string& text) {
    std::istringstream is(text);
    return parse_solution(is);
}

std::string write_plan(const Plan& plan) {
    std::string out;
    double total = 0.0;
    int i = 0;
    for (const auto& route : plan.routes) {
        out += "Route #" + std::to_string(++i) + ":";
        for (NodeId id : route.pod_sequence) out += " " + std::to_string(id);
        out += "\n";
        total += route.total_time;
    }
    out += "Cost: " + format_fixed(total) + "\n";
    return out;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string format_roundtrip(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

std::string instance_name_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void validate_solution_ids(const SolutionFile& solution, const Instance& instance) {
    std::set<NodeId> valid;
    for (const auto& p : instance.pods) valid.insert(p.id);
    for (const auto& route : solution.routes)
        for (NodeId id : route)
            if (!valid.count(id))
                throw ValidationError("solution references unknown POD " + std::to_string(id));
}

}  // namespace rss
