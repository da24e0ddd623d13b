// qhurwitz: tables of weighted Hurwitz numbers, tau-function coefficients and
// verification suites.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/family.hpp"
#include "qhurwitz/group_algebra.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/io.hpp"
#include "qhurwitz/parallel.hpp"
#include "qhurwitz/symfunc.hpp"
#include "qhurwitz/tau.hpp"
#include "qhurwitz/verify.hpp"

using namespace qhurwitz;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::optional<int> n;
    std::optional<int> nmax;
    std::optional<int> dmax;
    int N = 0;
    std::string family = "macdonald";
    std::optional<std::string> c;
    std::string mode = "symbolic";
    std::optional<std::string> q, t, alpha;
    std::uint64_t seed = kDefaultSeed;
    int trials = 5;
    std::string format = "json";
    std::string out;
    std::optional<std::string> cache_dir;
    std::optional<int> threads;
    std::string route = "character";
    std::string verify_name;
    std::string cache_action = "path";
};

// Exit code 2.
struct usage_error : error {
    using error::error;
};

std::vector<Rational> parse_c(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        if (item.find('.') != std::string::npos) throw usage_error("decimal input '" + item + "' is not accepted");
        c.push_back(Rational::parse(item));
    }
    return c;
}

ParamSpace build_params(FamilyKind kind, const RunConfig& cfg) {
    const Context ctx = family_context(kind);
    const std::pair<Param, const std::optional<std::string>*> given[] = {
        {Param::q, &cfg.q}, {Param::t, &cfg.t}, {Param::alpha, &cfg.alpha}};
    for (const auto& [p, v] : given)
        if (v->has_value() && !ctx.contains(p))
            throw usage_error("parameter " + std::string(param_name(p)) + " is not used by family " +
                              family_name(kind));
    if (cfg.mode == "symbolic") {
        ParamSpace ps(ctx);
        for (const auto& [p, v] : given)
            if (v->has_value()) ps.bind(p, Scalar::parse(**v, ctx));
        return ps;
    }
    if (cfg.mode != "numeric") throw usage_error("mode must be symbolic or numeric");
    std::mt19937_64 rng(cfg.seed);
    ParamSpace ps{Context()};
    for (const auto& [p, v] : given) {
        if (!ctx.contains(p)) continue;
        Rational r = v->has_value() ? Rational::parse(**v) : random_rational(rng);
        ps.bind(p, Scalar(r));
    }
    return ps;
}

WeightFamily build_family(const RunConfig& cfg) {
    FamilyKind kind;
    try {
        kind = family_from_name(cfg.family);
    } catch (const error& e) {
        throw usage_error(e.what());
    }
    return WeightFamily(kind, parse_c(cfg.c.value_or("1")), build_params(kind, cfg));
}

Format build_format(const RunConfig& cfg) {
    try {
        return format_from_name(cfg.format);
    } catch (const error& e) {
        throw usage_error(e.what());
    }
}

void require_bound(const char* what, int value, int bound) {
    if (value > bound)
        throw bound_exceeded(std::string(what) + " exceeds enumeration bound (" + std::to_string(value) + " > " +
                             std::to_string(bound) + ")");
    if (value < 0) throw usage_error(std::string(what) + " must be non-negative");
}

std::string cmd_chars(const RunConfig& cfg) {
    const int n = cfg.n.value_or(4);
    require_bound("n", n, kDefaultCharacterBound);
    if (n < 1) throw usage_error("n must be positive");
    const auto& ct = char_table(n);
    switch (build_format(cfg)) {
    case Format::json: return ojson::parse(ct.to_json()).dump(2) + "\n";
    case Format::csv: {
        std::string s = "lambda,mu,chi\n";
        for (const auto& l : ct.irreps)
            for (const auto& m : ct.classes)
                s += "\"" + to_string(l) + "\",\"" + to_string(m) + "\"," + std::to_string(ct.value(l, m)) + "\n";
        return s;
    }
    case Format::latex: {
        std::string s = "\\begin{tabular}{c|" + std::string(ct.classes.size(), 'r') + "}\n$\\lambda \\backslash \\mu$";
        for (const auto& m : ct.classes) s += " & $" + partition_to_latex(m) + "$";
        s += " \\\\\n\\hline\n";
        for (const auto& l : ct.irreps) {
            s += "$" + partition_to_latex(l) + "$";
            for (const auto& m : ct.classes) s += " & " + std::to_string(ct.value(l, m));
            s += " \\\\\n";
        }
        return s + "\\end{tabular}\n";
    }
    }
    return {};
}

std::string cmd_macdonald(RunConfig cfg) {
    const int n = cfg.n.value_or(3);
    require_bound("n", n, kDefaultSymDegreeBound);
    if (n < 1) throw usage_error("n must be positive");
    cfg.family = "macdonald";
    ParamSpace ps = build_params(FamilyKind::macdonald, cfg);
    auto parts = enumerate_partitions(n);
    switch (build_format(cfg)) {
    case Format::json: {
        ojson j;
        j["degree"] = n;
        j["params"] = family_to_json(WeightFamily(FamilyKind::macdonald, {}, ps))["params"];
        auto arr = ojson::array();
        for (const auto& l : parts) {
            SymFunc p = macdonald_P(l, ps);
            ojson e;
            e["lambda"] = l;
            e["b"] = macdonald_b(l, ps).to_string();
            auto coeffs = ojson::array();
            for (const auto& nu : parts) {
                Scalar c = p.coeff(nu);
                if (c.is_zero()) continue;
                coeffs.push_back(ojson{{"nu", nu}, {"value", c.to_string()}});
            }
            e["m_coeffs"] = coeffs;
            arr.push_back(e);
        }
        j["P"] = arr;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string s = "lambda,nu,value\n";
        for (const auto& l : parts) {
            SymFunc p = macdonald_P(l, ps);
            for (const auto& nu : parts)
                if (!p.coeff(nu).is_zero())
                    s += "\"" + to_string(l) + "\",\"" + to_string(nu) + "\",\"" + p.coeff(nu).to_string() + "\"\n";
        }
        return s;
    }
    case Format::latex: {
        std::string s = "\\begin{tabular}{c|" + std::string(parts.size(), 'c') + "}\n$P_\\lambda \\backslash m_\\nu$";
        for (const auto& nu : parts) s += " & $" + partition_to_latex(nu) + "$";
        s += " \\\\\n\\hline\n";
        for (const auto& l : parts) {
            SymFunc p = macdonald_P(l, ps);
            s += "$" + partition_to_latex(l) + "$";
            for (const auto& nu : parts) s += " & $" + scalar_to_latex(p.coeff(nu)) + "$";
            s += " \\\\\n";
        }
        return s + "\\end{tabular}\n";
    }
    }
    return {};
}

std::string cmd_weights(const RunConfig& cfg) {
    const int dmax = cfg.dmax.value_or(3);
    require_bound("d", dmax, kDefaultSymDegreeBound);
    WeightFamily fam = build_family(cfg);
    ZSeries w = fam.weight_series(static_cast<unsigned>(dmax));
    switch (build_format(cfg)) {
    case Format::json: {
        ojson j;
        j["family"] = family_to_json(fam);
        j["dmax"] = dmax;
        auto arr = ojson::array();
        for (const auto& c : w.coeffs()) arr.push_back(c.to_string());
        j["weights"] = arr;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string s = "j,value\n";
        for (unsigned k = 0; k <= w.order(); ++k) s += std::to_string(k) + ",\"" + w[k].to_string() + "\"\n";
        return s;
    }
    case Format::latex: {
        std::string s = "\\begin{tabular}{c|c}\n$j$ & $w_j$ \\\\\n\\hline\n";
        for (unsigned k = 0; k <= w.order(); ++k) s += std::to_string(k) + " & $" + scalar_to_latex(w[k]) + "$ \\\\\n";
        return s + "\\end{tabular}\n";
    }
    }
    return {};
}

// Tables for several (d, e) blocks in one document.
std::string emit_tables(Format f, int n, const WeightFamily& fam,
                        const std::vector<std::tuple<int, std::optional<int>, HurwitzTable>>& blocks) {
    std::string s;
    if (f == Format::json) {
        auto arr = ojson::array();
        for (const auto& [d, e, t] : blocks) arr.push_back(ojson::parse(table_to_json(n, d, e, fam, t)));
        return arr.dump(2) + "\n";
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [d, e, t] = blocks[i];
        std::string part = format_table(f, n, d, e, fam, t);
        if (f == Format::csv && i > 0) part = part.substr(part.find('\n') + 1);
        s += part;
        if (f == Format::latex) s += "\n";
    }
    return s;
}

std::string cmd_fd(const RunConfig& cfg) {
    const int n = cfg.n.value_or(3), dmax = cfg.dmax.value_or(3);
    if (n < 1) throw usage_error("n must be positive");
    const bool paths = cfg.route == "paths";
    if (!paths && cfg.route != "character" && cfg.route != "tau")
        throw usage_error("route must be character, paths or tau");
    require_bound("n", n, paths ? kPathMaxN : kCharacterRouteMaxN);
    require_bound("d", dmax, paths ? kPathMaxD : kCharacterRouteMaxD);
    Format f = build_format(cfg);
    WeightFamily fam = build_family(cfg);
    std::vector<std::tuple<int, std::optional<int>, HurwitzTable>> blocks;
    std::optional<TauTable> tau;
    if (cfg.route == "tau") tau = tau_tables(n, dmax, 0, fam);
    for (int d = 0; d <= dmax; ++d) {
        HurwitzTable t;
        if (paths) {
            t = fd_bruteforce(n, d, fam);
        } else if (tau) {
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& nu : enumerate_partitions(n)) t.emplace(std::make_pair(mu, nu), tau->powersum.at({d, mu, nu}));
        } else {
            t = fd_character(n, d, fam);
        }
        blocks.emplace_back(d, std::nullopt, std::move(t));
    }
    return emit_tables(f, n, fam, blocks);
}

std::string cmd_hde(const RunConfig& cfg) {
    const int n = cfg.n.value_or(3), dmax = cfg.dmax.value_or(2);
    if (n < 1) throw usage_error("n must be positive");
    require_bound("n", n, kHurwitzMaxN);
    require_bound("d", dmax, kHurwitzMaxD);
    Format f = build_format(cfg);
    WeightFamily fam = build_family(cfg);
    std::vector<std::tuple<int, std::optional<int>, HurwitzTable>> blocks;
    for (int d = 0; d <= dmax; ++d)
        for (int e = 0; e <= d; ++e) blocks.emplace_back(d, e, hde_geometric(n, d, e, fam));
    return emit_tables(f, n, fam, blocks);
}

std::string cmd_tau(const RunConfig& cfg) {
    const int nmax = cfg.nmax.value_or(cfg.n.value_or(3)), dmax = cfg.dmax.value_or(3);
    if (nmax < 1) throw usage_error("nmax must be positive");
    require_bound("n", nmax, kTauMaxN);
    require_bound("d", dmax, kTauMaxD);
    Format f = build_format(cfg);
    TauTable t = tau_tables(nmax, dmax, cfg.N, build_family(cfg));
    switch (f) {
    case Format::json: return t.to_json();
    case Format::latex: return t.to_latex();
    case Format::csv: {
        std::string s = "d,mu,nu,value\n";
        for (int n = 1; n <= nmax; ++n)
            for (int d = 0; d <= dmax; ++d)
                for (const auto& mu : enumerate_partitions(n))
                    for (const auto& nu : enumerate_partitions(n))
                        s += std::to_string(d) + ",\"" + to_string(mu) + "\",\"" + to_string(nu) + "\",\"" +
                             t.powersum.at({d, mu, nu}).to_string() + "\"\n";
        return s;
    }
    }
    return {};
}

int cmd_verify(const RunConfig& cfg, std::string& output) {
    VerifyOptions o;
    o.n = cfg.n;
    o.dmax = cfg.dmax;
    o.trials = cfg.trials;
    o.seed = cfg.seed;
    if (cfg.c) {
        std::stringstream ss(*cfg.c);
        for (std::string list; std::getline(ss, list, ';');) o.c_lists.push_back(parse_c(list));
    }
    std::error_code ec;
    o.cli_path = std::filesystem::read_symlink("/proc/self/exe", ec).string();
    o.work_dir = (std::filesystem::temp_directory_path() / ("qhurwitz-verify-" + std::to_string(::getpid()))).string();
    const auto& names = verify_names();
    if (std::find(names.begin(), names.end(), cfg.verify_name) == names.end()) {
        std::string all;
        for (const auto& n : names) all += " " + n;
        throw usage_error("unknown verification '" + cfg.verify_name + "'; expected one of" + all);
    }
    VerifyResult r = run_verify(cfg.verify_name, o);
    std::filesystem::remove_all(o.work_dir, ec);
    output = r.report + (r.ok ? "PASS " : "FAIL ") + cfg.verify_name + "\n";
    if (!r.ok) std::cerr << "counterexample: " << r.counterexample << "\n";
    return r.ok ? 0 : 1;
}

std::string cmd_cache(const RunConfig& cfg) {
    if (cfg.cache_action == "path") return cache_dir().string() + "\n";
    if (cfg.cache_action == "clear") return "removed " + std::to_string(clear_cache()) + " file(s)\n";
    if (cfg.cache_action == "warm") {
        const int nmax = cfg.nmax.value_or(cfg.n.value_or(8));
        require_bound("n", nmax, kDefaultCharacterBound);
        for (int n = 1; n <= nmax; ++n) char_table(n);
        return "cached character tables for n <= " + std::to_string(nmax) + " in " + cache_dir().string() + "\n";
    }
    throw usage_error("cache action must be path, clear or warm");
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw error("cannot write " + cfg.out);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Quantum weighted Hurwitz numbers and hypergeometric tau-function tables"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "File of key=value lines; explicit flags take precedence");

    app.add_option("--n", cfg.n, "Degree n (number of sheets)");
    app.add_option("--nmax", cfg.nmax, "Largest n for tau tables");
    app.add_option("--dmax", cfg.dmax, "Largest d (number of branch-point colengths)");
    app.add_option("--N", cfg.N, "Lattice index N of the tau-function");
    app.add_option("--family", cfg.family, "macdonald, elementary, complete, hall_littlewood, jack, classical");
    app.add_option("--c", cfg.c, "Comma-separated rationals c_i (verify: lists separated by ';')");
    app.add_option("--mode", cfg.mode, "symbolic or numeric parameters");
    app.add_option("--q", cfg.q, "Value of q");
    app.add_option("--t", cfg.t, "Value of t");
    app.add_option("--alpha", cfg.alpha, "Value of alpha");
    app.add_option("--seed", cfg.seed, "Seed for random evaluation points");
    app.add_option("--trials", cfg.trials, "Random evaluation points per check");
    app.add_option("--format", cfg.format, "json, csv or latex");
    app.add_option("--out", cfg.out, "Output file (default stdout)");
    app.add_option("--cache-dir", cfg.cache_dir, "Character table cache directory (empty disables)");
    app.add_option("--threads", cfg.threads, "Worker threads (1 = single-threaded)");

    auto* chars = app.add_subcommand("chars", "Character table of S_n");
    auto* mac = app.add_subcommand("macdonald", "Macdonald polynomials P_lambda in the monomial basis");
    auto* weights = app.add_subcommand("weights", "Weight series coefficients w_0..w_dmax");
    auto* fd = app.add_subcommand("fd", "Combinatorial weighted Hurwitz numbers F^d(mu,nu)");
    fd->add_option("--route", cfg.route, "character, paths or tau");
    auto* hde = app.add_subcommand("hde", "Geometric weighted Hurwitz numbers H^(d,e)(mu,nu)");
    auto* tau = app.add_subcommand("tau", "Tau-function coefficient tables in Schur and power-sum bases");
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("name", cfg.verify_name, "Suite name")->required();
    auto* cache = app.add_subcommand("cache", "Inspect or manage the character table cache");
    cache->add_option("action", cfg.cache_action, "path, clear or warm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.threads) set_thread_count(*cfg.threads);
        if (cfg.cache_dir) set_cache_dir(*cfg.cache_dir);
        std::string text;
        int code = 0;
        if (*chars) text = cmd_chars(cfg);
        else if (*mac) text = cmd_macdonald(cfg);
        else if (*weights) text = cmd_weights(cfg);
        else if (*fd) text = cmd_fd(cfg);
        else if (*hde) text = cmd_hde(cfg);
        else if (*tau) text = cmd_tau(cfg);
        else if (*ver) code = cmd_verify(cfg, text);
        else if (*cache) text = cmd_cache(cfg);
        write_output(cfg, text);
        return code;
    } catch (const bound_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
