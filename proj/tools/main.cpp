// Command-line front end: evaluates series expressions, builds Riordan and
// almost-Riordan matrices, runs the lattice-path counter, production-matrix
// and A-matrix computations, sequence transforms, and the built-in
// verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/characterization.hpp"
#include "riordan/io.hpp"
#include "riordan/parser.hpp"
#include "riordan/paths.hpp"
#include "riordan/selfcheck.hpp"
#include "riordan/series.hpp"
#include "riordan/transforms.hpp"

namespace {

using namespace riordan;

struct Common {
    std::size_t size = 8;
    std::optional<std::size_t> order;
    std::string format = "text";
    std::string output;
    std::vector<std::string> defs;
    std::vector<std::string> fixes;

    std::size_t effective_order() const {
        // Keeps rectification and triangulation clear of order exhaustion at
        // the default size.
        return order ? *order : std::max<std::size_t>(2 * size, 16);
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_size = true) {
    cmd->add_option("--order", c.order, "truncation order for power series")
        ->check(CLI::PositiveNumber);
    if (with_size) cmd->add_option("--size", c.size, "matrix/sequence size")->check(CLI::PositiveNumber);
    cmd->add_option("--format", c.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--output", c.output, "write output to this file instead of stdout");
    cmd->add_option("--def", c.defs, "define a named series: name=expr (repeatable)");
    cmd->add_option("--fix", c.fixes, "define a series as the fixed point of name=expr-in-name");
}

Environment build_env(const Common& c) {
    Environment env;
    std::size_t order = c.effective_order();
    auto split = [](const std::string& d) {
        auto eq = d.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(Errc::usage_error, "definition must look like name=expr: " + d);
        return std::pair{d.substr(0, eq), d.substr(eq + 1)};
    };
    for (const auto& d : c.defs) {
        auto [name, expr] = split(d);
        env.insert_or_assign(name, parse_series(expr, order, env));
    }
    for (const auto& d : c.fixes) {
        auto [name, expr] = split(d);
        env.insert_or_assign(name, solve_fixpoint(name, expr, order, env));
    }
    return env;
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) fail(Errc::usage_error, "cannot open output file " + c.output);
    out << text;
}

std::string read_spec_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return arg;  // inline JSON
    std::ifstream in(arg);
    if (!in) fail(Errc::usage_error, "cannot open spec file " + arg);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<Int> parse_int_seq(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(Int(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\n' || ch == '\t')
            flush();
        else
            cur += ch;
    }
    flush();
    return out;
}

RArray array_from(const Common& c, const Environment& env, const std::string& gx,
                  const std::string& fx) {
    std::size_t order = c.effective_order();
    return RArray(parse_series(gx, order, env), parse_series(fx, order, env));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riordan-array and lattice-path toolkit"};
    app.require_subcommand(1);

    Common c;

    // series
    auto* cmd_series = app.add_subcommand("series", "expand a series expression");
    std::string series_expr;
    add_common(cmd_series, c, false);
    cmd_series->add_option("--expr", series_expr, "expression to expand (defaults to the last --def/--fix)");

    // riordan
    auto* cmd_riordan = app.add_subcommand("riordan", "build a Riordan array matrix");
    std::string rg, rf, view = "matrix", sums;
    add_common(cmd_riordan, c);
    cmd_riordan->add_option("--g", rg, "g(x) expression")->required();
    cmd_riordan->add_option("--f", rf, "f(x) expression")->required();
    cmd_riordan->add_option("--view", view, "matrix, inverse, rectify, stretch, reverse, triangulate or symmetrize")
        ->check(CLI::IsMember({"matrix", "inverse", "rectify", "stretch", "reverse", "triangulate", "symmetrize"}));
    cmd_riordan->add_option("--sums", sums, "print row or diagonal sums instead of the matrix")
        ->check(CLI::IsMember({"row", "diagonal"}));

    // almost
    auto* cmd_almost = app.add_subcommand("almost", "build an almost Riordan array matrix");
    std::string aa, ag, af;
    add_common(cmd_almost, c);
    cmd_almost->add_option("--a", aa, "first-column series a(x)")->required();
    cmd_almost->add_option("--g", ag, "g(x) expression")->required();
    cmd_almost->add_option("--f", af, "f(x) expression")->required();

    // paths
    auto* cmd_paths = app.add_subcommand("paths", "count weighted lattice paths");
    std::string paths_spec;
    bool paths_sums = false;
    add_common(cmd_paths, c);
    cmd_paths->add_option("--spec", paths_spec, "step spec: JSON file or inline JSON")->required();
    cmd_paths->add_flag("--sums", paths_sums, "print left-factor counts (row sums)");

    // production
    auto* cmd_production = app.add_subcommand("production", "production matrix of a Riordan array");
    std::string pg, pf;
    add_common(cmd_production, c);
    cmd_production->add_option("--g", pg, "g(x) expression")->required();
    cmd_production->add_option("--f", pf, "f(x) expression")->required();

    // amatrix
    auto* cmd_amatrix = app.add_subcommand("amatrix", "solve or verify an A-matrix recurrence");
    std::string am_spec, am_g, am_f;
    bool am_verify = false;
    add_common(cmd_amatrix, c);
    cmd_amatrix->add_option("--spec", am_spec, "A-matrix spec: JSON file or inline JSON")->required();
    cmd_amatrix->add_flag("--verify", am_verify, "verify the recurrence against --g/--f instead of solving");
    cmd_amatrix->add_option("--g", am_g, "g(x) for --verify");
    cmd_amatrix->add_option("--f", am_f, "f(x) for --verify");

    // transform
    auto* cmd_transform = app.add_subcommand("transform", "sequence and series transforms");
    std::string t_op, t_seq, t_expr, t_cf, t_a = "0", t_b = "0";
    std::size_t t_terms = 0, t_depth = 8;
    add_common(cmd_transform, c, false);
    cmd_transform->add_option("--op", t_op, "hankel, invert, cf, jextract or somos4")
        ->required()
        ->check(CLI::IsMember({"hankel", "invert", "cf", "jextract", "somos4"}));
    cmd_transform->add_option("--seq", t_seq, "comma-separated integer sequence");
    cmd_transform->add_option("--expr", t_expr, "series expression input");
    cmd_transform->add_option("--cf", t_cf, "continued fraction spec: JSON file or inline JSON");
    cmd_transform->add_option("--terms", t_terms, "number of output terms");
    cmd_transform->add_option("--depth", t_depth, "extraction depth for jextract");
    cmd_transform->add_option("--A", t_a, "Somos-4 coefficient A");
    cmd_transform->add_option("--B", t_b, "Somos-4 coefficient B");

    // check
    auto* cmd_check = app.add_subcommand("check", "run the built-in verification suite");
    std::string check_filter;
    cmd_check->add_option("--filter", check_filter, "only run checks whose id contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(c.format);
        Environment env = build_env(c);
        std::size_t order = c.effective_order();

        if (cmd_series->parsed()) {
            std::string expr = series_expr;
            if (expr.empty()) {
                if (!c.fixes.empty())
                    expr = c.fixes.back().substr(0, c.fixes.back().find('='));
                else if (!c.defs.empty())
                    expr = c.defs.back().substr(0, c.defs.back().find('='));
                else
                    fail(Errc::usage_error, "series needs --expr or at least one --def/--fix");
            }
            Series s = parse_series(expr, order, env);
            emit(c, render(std::span<const Rat>(s.coeffs()), fmt));
        } else if (cmd_riordan->parsed()) {
            RArray r = array_from(c, env, rg, rf);
            if (!sums.empty()) {
                auto v = sums == "row" ? r.row_sums(c.size) : r.diagonal_sums(c.size);
                emit(c, render(std::span<const Int>(v), fmt));
            } else if (view == "matrix") {
                emit(c, render(r.matrix(c.size), fmt));
            } else if (view == "inverse") {
                emit(c, render(inverse(r).matrix(c.size), fmt));
            } else if (view == "rectify") {
                emit(c, render(r.rectify(c.size), fmt));
            } else if (view == "stretch") {
                emit(c, render(pair_matrix(r.stretch(), c.size), fmt));
            } else if (view == "reverse") {
                emit(c, render(r.reverse(c.size), fmt));
            } else if (view == "triangulate") {
                emit(c, render(r.triangulate().matrix(c.size), fmt));
            } else {
                emit(c, render(reverse_symmetrize(r, c.size), fmt));
            }
        } else if (cmd_almost->parsed()) {
            AlmostR m(parse_series(aa, order, env), parse_series(ag, order, env),
                      parse_series(af, order, env));
            emit(c, render(m.matrix(c.size), fmt));
        } else if (cmd_paths->parsed()) {
            StepSpec spec = stepspec_from_json(read_spec_arg(paths_spec));
            if (paths_sums) {
                auto v = left_factors(spec, c.size);
                emit(c, render(std::span<const Int>(v), fmt));
            } else {
                emit(c, render(count_paths(spec, c.size), fmt));
            }
        } else if (cmd_production->parsed()) {
            RArray r = array_from(c, env, pg, pf);
            ProductionMatrix p = production_matrix(r.matrix(c.size + 1), c.size);
            if (fmt == Format::json) {
                nlohmann::json j;
                j["z"] = nlohmann::json::array();
                j["a"] = nlohmann::json::array();
                for (const auto& v : p.z) j["z"].push_back(v.str());
                for (const auto& v : p.a) j["a"].push_back(v.str());
                j["matrix"] = nlohmann::json::parse(render(p.raw, fmt));
                emit(c, j.dump() + "\n");
            } else if (fmt == Format::csv) {
                emit(c, render(p.raw, fmt));
            } else {
                std::string out = "z: " + render(std::span<const Int>(p.z), fmt);
                out += "a: " + render(std::span<const Int>(p.a), fmt);
                out += render(p.raw, fmt);
                emit(c, out);
            }
        } else if (cmd_amatrix->parsed()) {
            AMatrixSpec spec = amatrixspec_from_json(read_spec_arg(am_spec));
            if (am_verify) {
                if (am_g.empty() || am_f.empty())
                    fail(Errc::usage_error, "--verify needs --g and --f");
                RArray r = array_from(c, env, am_g, am_f);
                bool ok = verify_amatrix(r.matrix(c.size), spec);
                emit(c, std::string(ok ? "true" : "false") + "\n");
            } else {
                Series f = solve_f_from_amatrix(spec, order);
                emit(c, render(std::span<const Rat>(f.coeffs()), fmt));
            }
        } else if (cmd_transform->parsed()) {
            if (t_op == "hankel") {
                if (t_seq.empty()) fail(Errc::usage_error, "hankel needs --seq");
                auto seq = parse_int_seq(t_seq);
                std::size_t m = t_terms ? t_terms : (seq.size() + 1) / 2;
                auto h = hankel(seq, m);
                emit(c, render(std::span<const Int>(h), fmt));
            } else if (t_op == "invert") {
                if (t_expr.empty()) fail(Errc::usage_error, "invert needs --expr");
                Series s = invert_transform(parse_series(t_expr, order, env));
                emit(c, render(std::span<const Rat>(s.coeffs()), fmt));
            } else if (t_op == "cf") {
                if (t_cf.empty()) fail(Errc::usage_error, "cf needs --cf");
                CFSpec spec = cfspec_from_json(read_spec_arg(t_cf));
                Series s = cf_eval(spec, order);
                emit(c, render(std::span<const Rat>(s.coeffs()), fmt));
            } else if (t_op == "jextract") {
                if (t_expr.empty()) fail(Errc::usage_error, "jextract needs --expr");
                // a little slack so divisions inside the expression cannot
                // starve the extraction of coefficients
                Series g = parse_series(t_expr, std::max(order, 2 * t_depth + 1) + 4, env);
                CFSpec spec = jfraction_extract(g, t_depth);
                nlohmann::json j;
                j["kind"] = "jacobi";
                j["b"] = nlohmann::json::array();
                j["lam"] = nlohmann::json::array();
                for (const auto& v : spec.b_or_c) j["b"].push_back(rat_str(v));
                for (const auto& v : spec.lam_or_d) j["lam"].push_back(rat_str(v));
                emit(c, j.dump() + "\n");
            } else {  // somos4
                if (t_seq.empty()) fail(Errc::usage_error, "somos4 needs --seq");
                bool ok = somos4_check(parse_int_seq(t_seq), Int(t_a), Int(t_b));
                emit(c, std::string(ok ? "true" : "false") + "\n");
            }
        } else if (cmd_check->parsed()) {
            auto results = selfcheck::run_all(check_filter);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "ok   " : "FAIL ") << r.id;
                if (!r.pass && !r.note.empty()) std::cout << "  (" << r.note << ")";
                std::cout << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "all " : "FAILURES: ") << results.size() << " checks"
                      << (all ? " passed" : " ran") << "\n";
            return all ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::usage_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
