// Command-line front end: solve q_s(x), print ladder constants, sample the
// map x -> q_s(x) to CSV, cross-check solutions, and expand targets in a
// given base.
//
// Exit codes: 0 success; 2 bad input (parse/domain/size/bracket errors);
// 3 the result is only located between the last scanned level and the limit
// base; 4 a certification could not be completed at the precision cap (or a
// check subcommand did not pass).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "univoque/bases.hpp"
#include "univoque/errors.hpp"
#include "univoque/oracle.hpp"
#include "univoque/precise.hpp"
#include "univoque/rational.hpp"
#include "univoque/solver.hpp"
#include "univoque/words.hpp"

namespace {

using nlohmann::json;
using namespace univoque;

struct GlobalOpts {
    std::string tol_text = "1e-12";
    int max_level = 20;
    int precision_cap = 0; // 0 = keep the built-in limits
    bool json_out = false;
};

solver::QsOptions solver_options(const GlobalOpts& g, bool force_general = false) {
    solver::QsOptions opt;
    opt.tol = parse_number(g.tol_text);
    if (sgn(opt.tol) <= 0) throw ParseError("--tol must be positive");
    opt.max_level = g.max_level;
    opt.force_general = force_general;
    return opt;
}

std::string class_name(solver::QsClass c) {
    switch (c) {
        case solver::QsClass::BelowLimit: return "below-limit";
        case solver::QsClass::AtLimit: return "at-limit";
        case solver::QsClass::AboveLimit: return "above-limit";
        case solver::QsClass::NearLimit: return "near-limit";
    }
    return "unknown";
}

std::string verdict_name(oracle::BranchVerdict v) {
    switch (v) {
        case oracle::BranchVerdict::Unique: return "unique";
        case oracle::BranchVerdict::Multiple: return "multiple";
        case oracle::BranchVerdict::Infeasible: return "infeasible";
        case oracle::BranchVerdict::Undecided: return "undecided";
    }
    return "unknown";
}

// Fixed-point rendering with trailing zeros trimmed (keeps at least "x.0"
// style integers readable as plain integers).
std::string trimmed_decimal(const Rational& v, int frac_digits) {
    std::string s = decimal_string(v, frac_digits);
    if (s.find('.') == std::string::npos) return s;
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') last--;
    return s.substr(0, last + 1);
}

json bracket_json(const precise::RootInterval& r) {
    return json{{"decimal", r.enclosure().decimal(30)},
                {"lo", r.lo.get_str()},
                {"hi", r.hi.get_str()},
                {"width", r.width().get_d()}};
}

void print_qs_result(const std::string& x_text, const solver::QsResult& r, bool as_json) {
    if (as_json) {
        json j;
        j["x"] = x_text;
        j["class"] = class_name(r.cls);
        j["level"] = r.level;
        if (r.gamma) j["gamma"] = r.gamma->str();
        if (r.qs) j["qs"] = bracket_json(*r.qs);
        if (r.cls == solver::QsClass::AboveLimit) j["gap"] = r.gap_index;
        j["path"] = r.path;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "class: " << class_name(r.cls) << "\n";
    if (r.cls == solver::QsClass::AboveLimit)
        std::cout << "gap: " << r.gap_index
                  << " (q_s exceeds the limit base; no finite-level witness)\n";
    if (r.level > 0) std::cout << "level: " << r.level << "\n";
    if (r.gamma) std::cout << "gamma: " << r.gamma->str() << "\n";
    if (r.qs) {
        std::cout << "q_s: " << r.qs->enclosure().decimal(30) << "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", r.qs->width().get_d());
        std::cout << "bracket-width: " << buf << "\n";
    }
    std::cout << "path: " << r.path << "\n";
}

int run_qs(const GlobalOpts& g, const std::string& x_text, bool force_general) {
    Rational x = parse_number(x_text);
    bases::BaseLadder ladder;
    auto res = solver::qs(x, ladder, solver_options(g, force_general));
    print_qs_result(x_text, res, g.json_out);
    return res.cls == solver::QsClass::NearLimit ? 3 : 0;
}

int run_constants(const GlobalOpts& g, int levels) {
    bases::BaseLadder ladder;
    Rational w = pow2_inv(120);
    json j;
    auto emit = [&](const std::string& name, const std::string& value) {
        if (g.json_out)
            j[name] = value;
        else
            std::cout << name << " = " << value << "\n";
    };
    for (int n = 1; n <= levels; ++n)
        emit("q_" + std::to_string(n), ladder.qn(n, w).enclosure().decimal(30));
    emit("q_limit", ladder.q_limit(w).enclosure().decimal(30));
    for (int n = 1; n <= levels; ++n)
        emit("z_" + std::to_string(n), ladder.zn(n, w).decimal(30));
    for (int k = 1; k <= 3; ++k) {
        std::string left = ladder.gap_left(k, w).decimal(24);
        std::string right = ladder.gap_right(k, w).decimal(24);
        if (g.json_out)
            j["gap_" + std::to_string(k)] = json{{"left", left}, {"right", right}};
        else
            std::cout << "gap_" << k << " = [" << left << ", " << right << ")\n";
    }
    if (g.json_out) std::cout << j.dump(2) << "\n";
    return 0;
}

int run_figure(const GlobalOpts& g, const std::string& from_text, const std::string& to_text,
               long samples, const std::string& out_path) {
    Rational from = parse_number(from_text);
    Rational to = parse_number(to_text);
    if (!(from < to)) throw ParseError("--from must be strictly below --to");
    if (samples < 2 || samples > 100000) throw ParseError("--samples must lie in [2, 100000]");

    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);

    bases::BaseLadder ladder;
    auto opt = solver_options(g);
    Rational step = (to - from) / Rational(samples - 1);

    out << "x,q_s,level,gamma,class\n";
    std::map<std::string, long> tally;
    for (long i = 0; i < samples; ++i) {
        Rational xi = from + step * Rational(i);
        // Sample on an exact decimal grid so rows reproduce from their
        // printed x alone; fall back to the exact point if rounding would
        // leave the solver's domain.
        Rational xr = round_decimal(xi, 18);
        if (sgn(xr) <= 0) xr = xi;
        auto res = solver::qs(xr, ladder, opt);
        out << trimmed_decimal(xr, 18) << ","
            << (res.qs ? res.qs->enclosure().decimal(17) : "") << "," << res.level << ","
            << (res.gamma ? res.gamma->str() : "") << "," << class_name(res.cls) << "\n";
        ++tally[class_name(res.cls)];
    }
    out.close();

    if (g.json_out) {
        json j;
        j["out"] = out_path;
        j["rows"] = samples;
        j["classes"] = tally;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << samples << " rows to " << out_path << "\n";
    }
    return 0;
}

int run_check(const GlobalOpts& g, const std::string& x_text, const std::string& q_text,
              int depth) {
    Rational x = parse_number(x_text);

    if (!q_text.empty()) {
        // Direct oracle: branch structure of x's expansions at an exact base.
        Rational q = parse_number(q_text);
        auto br = oracle::expansion_branches(x, q, depth);
        if (g.json_out) {
            json j{{"x", x_text},
                   {"q", q_text},
                   {"verdict", verdict_name(br.verdict)},
                   {"depth", br.depth}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << verdict_name(br.verdict) << "\n"
                      << "depth: " << br.depth << "\n";
        }
        return br.verdict == oracle::BranchVerdict::Undecided ? 4 : 0;
    }

    // Solve, then certify the solution independently.
    bases::BaseLadder ladder;
    auto res = solver::qs(x, ladder, solver_options(g));
    if (res.cls != solver::QsClass::BelowLimit) {
        print_qs_result(x_text, res, g.json_out);
        if (!g.json_out)
            std::cout << "check: no finite-level witness to verify for this class\n";
        return res.cls == solver::QsClass::NearLimit ? 3 : 0;
    }

    auto rep = oracle::verify_uniqueness_at(x, *res.qs, *res.gamma, res.level, depth);
    if (g.json_out) {
        json j;
        j["x"] = x_text;
        j["level"] = res.level;
        j["gamma"] = res.gamma->str();
        j["qs"] = bracket_json(*res.qs);
        j["pass"] = rep.pass;
        j["family_member"] = rep.is_family_member;
        j["value_enclosed"] = rep.value_enclosed;
        j["verdict"] = verdict_name(rep.branches.verdict);
        j["depth"] = rep.branches.depth;
        j["detail"] = rep.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "level: " << res.level << "\n"
                  << "gamma: " << res.gamma->str() << "\n"
                  << "q_s: " << res.qs->enclosure().decimal(30) << "\n"
                  << "family-member: " << (rep.is_family_member ? "yes" : "no") << "\n"
                  << "value-enclosed: " << (rep.value_enclosed ? "yes" : "no") << "\n"
                  << "branches: " << verdict_name(rep.branches.verdict) << " (depth "
                  << rep.branches.depth << ")\n"
                  << "check: " << (rep.pass ? "pass" : "fail") << " - " << rep.detail << "\n";
    }
    return rep.pass ? 0 : 4;
}

int run_expand(const GlobalOpts& g, const std::string& x_text, const std::string& q_text,
               long digits, const std::string& algorithm) {
    Rational x = parse_number(x_text);
    Rational q = parse_number(q_text);
    words::BinaryWord w = algorithm == "greedy"
                              ? oracle::greedy_expansion(x, q, static_cast<size_t>(digits))
                              : oracle::quasi_greedy_expansion(x, q, static_cast<size_t>(digits));
    if (g.json_out) {
        json j{{"x", x_text}, {"q", q_text}, {"algorithm", algorithm}, {"digits", w.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << w.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"smallest bases in (1, 2] with a unique binary expansion of a target"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol_text, "width of the q_s bracket (decimal or fraction)")
        ->envname("UNIVOQUE_TOL")
        ->capture_default_str();
    app.add_option("--max-level", g.max_level, "deepest ladder level the scan may use")
        ->envname("UNIVOQUE_MAX_LEVEL")
        ->check(CLI::Range(1, 20))
        ->capture_default_str();
    app.add_option("--precision-cap", g.precision_cap,
                   "cap in bits for adaptive-precision retries")
        ->envname("UNIVOQUE_PRECISION_CAP")
        ->check(CLI::Range(64, 1 << 22));
    app.add_flag("--json", g.json_out, "emit JSON instead of text")->envname("UNIVOQUE_JSON");

    auto* sub_qs = app.add_subcommand("qs", "solve the smallest unique base for a target");
    std::string qs_x;
    bool force_general = false;
    sub_qs->add_option("x", qs_x, "target: positive decimal or fraction p/q")->required();
    sub_qs->add_flag("--force-general", force_general,
                     "skip the closed forms and always run the level scan");

    auto* sub_constants = app.add_subcommand("constants", "print ladder bases and thresholds");
    int levels = 6;
    sub_constants->add_option("--levels", levels, "how many ladder levels to print")
        ->check(CLI::Range(1, 14))
        ->capture_default_str();

    auto* sub_figure =
        app.add_subcommand("figure", "sample x -> q_s(x) over a range into a CSV file");
    std::string fig_from, fig_to, fig_out = "figure.csv";
    long fig_samples = 0;
    sub_figure->add_option("--from", fig_from, "left endpoint")->required();
    sub_figure->add_option("--to", fig_to, "right endpoint")->required();
    sub_figure->add_option("--samples", fig_samples, "number of sample points")->required();
    sub_figure->add_option("--out", fig_out, "output CSV path")->capture_default_str();

    auto* sub_check = app.add_subcommand(
        "check", "certify a solved base, or probe expansion branching at a given base");
    std::string check_x, check_q;
    int check_depth = 64;
    sub_check->add_option("x", check_x, "target: positive decimal or fraction p/q")->required();
    sub_check->add_option("q", check_q, "optional base in (1, 2) to probe directly");
    sub_check->add_option("--depth", check_depth, "digits of the expansion to examine")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();

    auto* sub_expand = app.add_subcommand("expand", "digit expansion of a target in a base");
    std::string exp_x, exp_q, exp_algorithm = "greedy";
    long exp_digits = 0;
    sub_expand->add_option("x", exp_x, "target: non-negative decimal or fraction p/q")
        ->required();
    sub_expand->add_option("q", exp_q, "base in (1, 2), decimal or fraction")->required();
    sub_expand->add_option("--digits", exp_digits, "number of digits to emit")
        ->required()
        ->check(CLI::Range(1L, 1L << 20));
    sub_expand->add_option("--algorithm", exp_algorithm, "digit choice at ties")
        ->check(CLI::IsMember({"greedy", "quasi-greedy"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::optional<precise::PrecisionGuard> guard;
    if (g.precision_cap > 0) {
        auto& lim = precise::limits();
        lim.cap = g.precision_cap;
        lim.start = std::min(lim.start, lim.cap);
        guard.emplace(lim.start);
    }

    try {
        if (app.got_subcommand(sub_qs)) return run_qs(g, qs_x, force_general);
        if (app.got_subcommand(sub_constants)) return run_constants(g, levels);
        if (app.got_subcommand(sub_figure))
            return run_figure(g, fig_from, fig_to, fig_samples, fig_out);
        if (app.got_subcommand(sub_check)) return run_check(g, check_x, check_q, check_depth);
        if (app.got_subcommand(sub_expand))
            return run_expand(g, exp_x, exp_q, exp_digits, exp_algorithm);
    } catch (const BoundaryError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 4;
    } catch (const PrecisionError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
