#pragma once

// Command implementations behind tools/jamesian_cli.cpp. Each command writes
// to the given stream and returns the process exit code:
//   0 success, 1 validation / usage / I/O error, 2 numeric failure.

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "format.hpp"
#include "homeo.hpp"
#include "jamesian.hpp"
#include "regions.hpp"
#include "salzmann.hpp"

namespace jamesian::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FunctionKind { Adams, Representable, SalzmannTransfer };

struct FunctionSpec {
    FunctionKind kind = FunctionKind::Adams;
    // logit | scaled-logit:k | piecewise:eps; empty selects the kind's default.
    std::string f;
    std::optional<double> tolerance;
};

inline FunctionKind parse_kind(const std::string& s) {
    if (s == "adams") return FunctionKind::Adams;
    if (s == "representable") return FunctionKind::Representable;
    if (s == "salzmann-transfer") return FunctionKind::SalzmannTransfer;
    throw InputError("unknown function kind '" + s + "' (expected adams, representable or salzmann-transfer)");
}

inline double parse_real(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InputError("cannot parse " + what + " '" + s + "' as a number");
    }
    if (used != s.size()) throw InputError("cannot parse " + what + " '" + s + "' as a number");
    return v;
}

inline OddHomeomorphism parse_homeomorphism(const std::string& s) {
    if (s == "logit") return logit();
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string head = s.substr(0, colon);
        const double p = parse_real(s.substr(colon + 1), "homeomorphism parameter");
        if (head == "scaled-logit") return scaled_logit(p);
        if (head == "piecewise") return piecewise_identity(p);
    }
    throw InputError("unknown homeomorphism '" + s + "' (expected logit, scaled-logit:k or piecewise:eps)");
}

inline JamesianFunction make_function(const FunctionSpec& spec) {
    auto with_tol = [&](JamesianFunction J) {
        if (!spec.tolerance) return J;
        if (!(*spec.tolerance > 0.0)) throw InputError("tolerance must be positive");
        return JamesianFunction([J](double a, double b) { return J(a, b); }, J.construction(), *spec.tolerance);
    };
    switch (spec.kind) {
        case FunctionKind::Adams:
            if (!spec.f.empty()) throw InputError("--f is not used with --kind adams");
            return with_tol(adams_function());
        case FunctionKind::Representable:
            return with_tol(from_representable(parse_homeomorphism(spec.f.empty() ? "logit" : spec.f)));
        case FunctionKind::SalzmannTransfer:
            return with_tol(
                from_loop_transfer(salzmann_loop(), parse_homeomorphism(spec.f.empty() ? "piecewise:0.1" : spec.f)));
    }
    throw InputError("unsupported function kind");
}

/// Deterministic triples always included by check and witness: the
/// non-transitivity certificate of the default Salzmann transfer and two
/// triples on the c = 1/2 slice.
inline std::vector<Triple> pinned_triples() { return {{0.8, 0.6, 0.7}, {0.3, 0.6, 0.5}, {0.7, 0.2, 0.5}}; }

// ---------------------------------------------------------------------------
// Standings and matchups

struct Team {
    std::string name;
    double pct = 0.0;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace detail

/// Reads `team,pct` CSV with a header row. Names must be unique and
/// percentages strictly inside (0,1); errors name the offending line.
inline std::vector<Team> parse_standings(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = true;
    std::vector<Team> teams;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (header) {
            header = false;
            if (cells.size() != 2 || cells[0] != "team" || cells[1] != "pct")
                throw InputError("standings line 1: expected header 'team,pct'");
            continue;
        }
        const std::string where = "standings line " + std::to_string(lineno);
        if (cells.size() != 2) throw InputError(where + ": expected 2 fields, got " + std::to_string(cells.size()));
        if (cells[0].empty()) throw InputError(where + ": empty team name");
        const double pct = parse_real(cells[1], "winning percentage");
        if (!(pct > 0.0 && pct < 1.0))
            throw InputError(where + ": percentage " + cells[1] + " for team '" + cells[0] +
                             "' must lie strictly inside (0,1); 0 and 1 lead to the undefined corners "
                             "(0,0) and (1,1)");
        if (!seen.insert(cells[0]).second) throw InputError(where + ": duplicate team '" + cells[0] + "'");
        teams.push_back({cells[0], pct});
    }
    if (header) throw InputError("standings file is empty");
    return teams;
}

/// M[i][j] = J(a_i, a_j); the diagonal is exactly 1/2.
inline std::vector<std::vector<double>> matchup_matrix(const JamesianFunction& J, const std::vector<Team>& teams) {
    const std::size_t n = teams.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.5));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = J(teams[i].pct, teams[j].pct);
    return m;
}

inline void write_matchup_csv(std::ostream& out, const std::vector<Team>& teams,
                              const std::vector<std::vector<double>>& m) {
    out << "team";
    for (const auto& t : teams) out << ',' << t.name;
    out << '\n';
    for (std::size_t i = 0; i < teams.size(); ++i) {
        out << teams[i].name;
        for (std::size_t j = 0; j < teams.size(); ++j) out << ',' << format_number(m[i][j]);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Grids

inline void write_function_grid(std::ostream& out, const JamesianFunction& J, int resolution) {
    if (resolution < 1) throw InputError("grid resolution must be at least 1");
    const auto pts = interior_lattice(resolution);
    out << "a,b,J\n";
    for (double a : pts)
        for (double b : pts) out << format_number(a) << ',' << format_number(b) << ',' << format_number(J(a, b)) << '\n';
}

inline void write_region_grid(std::ostream& out, const ExplicitRegionSpec& spec, int resolution) {
    out << "a,b,label\n";
    for (const auto& c : region_grid(spec, resolution))
        out << format_number(c.a) << ',' << format_number(c.b) << ',' << to_string(c.label) << '\n';
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const CheckReport& r) {
    json j;
    j["property"] = r.property;
    j["samples"] = r.samples;
    j["max_residual"] = r.max_residual;
    j["worst_case"] = r.worst_case;
    j["tolerance"] = r.tolerance;
    j["strict"] = r.strict;
    j["passed"] = r.passed;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return j;
}

inline json to_json(const DefectReport& r) {
    return json{{"property", "transitivity_defect"},
                {"max_defect", r.max_defect},
                {"argmax", r.argmax},
                {"samples", r.samples},
                {"threshold", r.threshold},
                {"seed", r.seed},
                {"verdict", to_string(r.verdict)}};
}

inline json to_json(const TransitivityWitness& w, std::uint64_t seed) {
    return json{{"triple", w.triple}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"defect", w.defect}, {"seed", seed}};
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_eval(const FunctionSpec& spec, double a, double b, std::ostream& out) {
    const auto J = make_function(spec);
    out << format_number(eval_extended(J, a, b)) << '\n';
    return kExitOk;
}

/// Axiom reports gate the exit code; the transitivity defect is informational.
inline int cmd_check(const FunctionSpec& spec, int grid, std::size_t triples, std::uint64_t seed, std::ostream& out) {
    const auto J = make_function(spec);
    json doc;
    doc["function"] = J.name();
    bool ok = true;
    json checks = json::array();
    for (auto r : check_axioms(J, grid)) {
        r.seed = seed;
        ok = ok && r.passed;
        checks.push_back(to_json(r));
    }
    json extended = json::array();
    for (auto r : check_proto_james(J, grid)) {
        r.seed = seed;
        extended.push_back(to_json(r));
    }
    doc["checks"] = checks;
    doc["extended_checks"] = extended;
    doc["transitivity"] = to_json(transitivity_defect(J, {triples, seed, pinned_triples()}));
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
    return ok ? kExitOk : kExitNumeric;
}

inline int cmd_witness(const FunctionSpec& spec, double threshold, std::size_t budget, std::uint64_t seed,
                       std::ostream& out) {
    if (!(threshold > 0.0)) throw InputError("--threshold must be positive");
    const auto J = make_function(spec);
    const auto w = find_transitivity_witness(J, {budget, seed, pinned_triples()}, threshold);
    if (w)
        out << to_json(*w, seed).dump(2) << '\n';
    else
        out << "none\n";
    return kExitOk;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

inline void finish_output(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("failed writing '" + path + "'");
}

inline int cmd_grid(const FunctionSpec& spec, int resolution, const std::string& path) {
    const auto J = make_function(spec);
    std::ostringstream buf;
    write_function_grid(buf, J, resolution);
    auto f = open_output(path);
    f << buf.str();
    finish_output(f, path);
    return kExitOk;
}

inline int cmd_regions(double eps, int resolution, const std::string& path) {
    const ExplicitRegionSpec spec(eps);
    std::ostringstream buf;
    write_region_grid(buf, spec, resolution);
    auto f = open_output(path);
    f << buf.str();
    finish_output(f, path);
    return kExitOk;
}

inline int cmd_predict(const FunctionSpec& spec, const std::string& standings_path, std::ostream& out) {
    std::ifstream in(standings_path);
    if (!in) throw IoError("cannot open standings file '" + standings_path + "'");
    const auto teams = parse_standings(in);
    const auto J = make_function(spec);
    write_matchup_csv(out, teams, matchup_matrix(J, teams));
    return kExitOk;
}

}  // namespace jamesian::cli
