#pragma once

// Command-line frontend: `kt <verb> [options]`. Objects are read and written
// in the canonical JSON forms of kt/serialize.hpp.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kt/acceptance.hpp"
#include "kt/local_cohomology.hpp"
#include "kt/serialize.hpp"
#include "kt/strong_reducer.hpp"

namespace kt::cli {

using io::Json;

enum ExitCode : int { ok = 0, invalid = 1, cap_exhausted = 2, check_failed = 3 };

struct Window {
    int t_min = -6;
    int t_max = 6;
};

inline Window parse_window(const std::string& s, const std::string& where)
{
    auto colon = s.find(':', s.empty() ? 0 : 1);
    Window w;
    try {
        if (colon == std::string::npos) throw std::invalid_argument(s);
        std::size_t a = 0, b = 0;
        w.t_min = std::stoi(s.substr(0, colon), &a);
        w.t_max = std::stoi(s.substr(colon + 1), &b);
        if (a != colon || b != s.size() - colon - 1) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw ValidationError("window must be tmin:tmax, got '" + s + "'", where);
    }
    if (w.t_min > w.t_max) throw ValidationError("window is empty", where);
    return w;
}

/// Caps and window after applying flags > KT_* environment > config file.
struct Settings {
    int n_cap = 32;
    std::optional<int> u_cap;
    Window window;
};

struct SettingSources {
    std::optional<int> n_cap;
    std::optional<int> u_cap;
    std::optional<std::string> window;
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

inline EnvLookup process_env()
{
    return [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        if (!v) return std::nullopt;
        return std::string(v);
    };
}

inline int parse_int(const std::string& s, const std::string& where)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ValidationError("expected an integer, got '" + s + "'", where);
}

inline Settings resolve_settings(const SettingSources& flags, const EnvLookup& env, const Json& config)
{
    Settings s;
    if (!config.is_null() && !config.is_object()) throw ValidationError("config must be a JSON object", "config");
    if (config.contains("n_cap")) {
        if (!config["n_cap"].is_number_integer()) throw ValidationError("n_cap must be an integer", "config.n_cap");
        s.n_cap = config["n_cap"].get<int>();
    }
    if (config.contains("u_cap")) {
        if (!config["u_cap"].is_number_integer()) throw ValidationError("u_cap must be an integer", "config.u_cap");
        s.u_cap = config["u_cap"].get<int>();
    }
    if (config.contains("window")) {
        if (!config["window"].is_string()) throw ValidationError("window must be a string tmin:tmax", "config.window");
        s.window = parse_window(config["window"].get<std::string>(), "config.window");
    }
    if (auto v = env("KT_NCAP")) s.n_cap = parse_int(*v, "KT_NCAP");
    if (auto v = env("KT_UCAP")) s.u_cap = parse_int(*v, "KT_UCAP");
    if (auto v = env("KT_WINDOW")) s.window = parse_window(*v, "KT_WINDOW");
    if (flags.n_cap) s.n_cap = *flags.n_cap;
    if (flags.u_cap) s.u_cap = *flags.u_cap;
    if (flags.window) s.window = parse_window(*flags.window, "--window");
    if (s.n_cap < 1) throw ValidationError("n_cap must be positive", "n_cap");
    if (s.u_cap && *s.u_cap < 1) throw ValidationError("u_cap must be positive", "u_cap");
    return s;
}

namespace detail {

/// A file path, or inline text starting with `p=`.
inline GradedPolyRing load_ring(const std::string& arg)
{
    if (arg.rfind("p=", 0) == 0) return io::parse_ring(arg);
    return io::parse_ring(io::read_file(arg));
}

inline std::vector<Polynomial> parse_elems(const GradedPolyRing& R, const std::string& s, const char* where)
{
    try {
        auto f = poly::parse_list(R, s);
        check_sequence(f, where);
        return f;
    } catch (const ValidationError& e) {
        if (e.where() == where) throw;
        throw ValidationError(e.what(), where);
    }
}

inline Json records_json(const GradedDimTable& t)
{
    Json a = Json::array();
    for (const auto& c : t.cells) a.push_back(Json{{"dim", c.dim}, {"i", c.i}, {"stable", c.stable}, {"stage", c.stage}, {"t", c.t}});
    return a;
}

inline void print_table(std::ostream& out, const GradedDimTable& t)
{
    out << t.method << '\n' << std::setw(4) << "i" << std::setw(6) << "t" << std::setw(6) << "dim" << std::setw(7) << "stage" << "  stable\n";
    for (const auto& c : t.cells)
        out << std::setw(4) << c.i << std::setw(6) << c.t << std::setw(6) << c.dim << std::setw(7) << c.stage << "  " << (c.stable ? "yes" : "no") << '\n';
}

inline Json report_json(const ReducerReport& r)
{
    auto clause = [](const Clause& c) { return Json{{"ok", c.ok}, {"witness", c.witness}}; };
    return Json{{"all", r.all()},
                {"epimorphism", clause(r.epimorphism)},
                {"factors", clause(r.factors)},
                {"min_c", clause(r.min_c)},
                {"pd", r.pd},
                {"supph", clause(r.supph)}};
}

inline void print_report(std::ostream& out, const ReducerReport& r)
{
    auto line = [&](const char* name, const Clause& c) { out << (c.ok ? "ok    " : "FAIL  ") << name << ": " << c.witness << '\n'; };
    line("min_c", r.min_c);
    line("supph", r.supph);
    line("epimorphism", r.epimorphism);
    line("factors", r.factors);
    out << "pd H_m(T) = " << r.pd << '\n';
}

inline Json stats_json(const ComplexStats& s)
{
    auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"max_c", opt(s.max_c)}, {"min", opt(s.min)}, {"min_c", opt(s.min_c)}, {"supph", Json(std::vector<int>(s.supph.begin(), s.supph.end()))}, {"width", s.width}};
}

inline void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream o(p);
    if (!o) throw ValidationError("cannot write file", p.string());
    o << text;
}

} // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env = process_env())
{
    CLI::App app{"kt: Koszul, Tate and local cohomology computations over F_p"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    bool json = false;
    std::string ring_arg, config_path;
    SettingSources flags;
    auto common = [&](CLI::App* c, bool ring) {
        c->add_flag("--json", json, "Machine-readable JSON output");
        c->add_option("--config", config_path, "Config file (default kt.json when present)");
        if (ring) c->add_option("--ring", ring_arg, "Ring file, or inline text 'p=..; vars ..;'")->required();
    };
    auto caps = [&](CLI::App* c) {
        c->add_option("--n-cap", flags.n_cap, "Cap on the exponent and stabilization searches");
        c->add_option("--u-cap", flags.u_cap, "Cap on the Tate lift exponent (default 16r)");
    };

    std::string elems, complex_path, module_path, ideal, support, target_path, map_path, reducer_path, alpha_path, out_dir = ".";
    std::string method = "koszul";
    std::optional<int> only_i;
    int n = 2, m = 1, r = 1, u_start = 0, max_len = 8, depth = 32, e_max = 2;
    bool efd = false;

    auto* c_koszul = app.add_subcommand("koszul", "Koszul complex K(f)");
    common(c_koszul, true);
    c_koszul->add_option("--elems", elems, "Comma-separated homogeneous elements")->required();

    auto* c_kappa = app.add_subcommand("kappa", "Comparison map K(f^n) -> K(f^m)");
    common(c_kappa, true);
    c_kappa->add_option("--elems", elems)->required();
    c_kappa->add_option("--n", n)->required();
    c_kappa->add_option("--m", m)->required();

    auto* c_tate = app.add_subcommand("tate", "Tate resolution of S/(f)");
    common(c_tate, true);
    c_tate->add_option("--elems", elems)->required();
    c_tate->add_option("--max-len", max_len, "Length cap")->capture_default_str();

    auto* c_lift = app.add_subcommand("lift", "Lift T(f^u) -> K(f^r) extending kappa");
    common(c_lift, true);
    caps(c_lift);
    c_lift->add_option("--elems", elems)->required();
    c_lift->add_option("--r", r)->required();
    c_lift->add_option("--u-start", u_start, "First exponent tried (default r)");

    auto* c_lc = app.add_subcommand("localcoh", "Graded local cohomology table");
    common(c_lc, true);
    caps(c_lc);
    c_lc->add_option("--elems", elems)->required();
    c_lc->add_option("--module", module_path, "Module file (default S)");
    c_lc->add_option("--method", method)->check(CLI::IsMember({"koszul", "ext", "both"}));
    c_lc->add_option("--i", only_i, "Single cohomological degree (default 0..nvars)");
    c_lc->add_option("--window", flags.window, "Internal degrees tmin:tmax");
    c_lc->add_option("--depth", depth, "Tate directed system stages")->capture_default_str();

    auto* c_res = app.add_subcommand("resolve", "Free resolution of a module or a complex");
    common(c_res, true);
    auto* res_cx = c_res->add_option("--complex", complex_path, "Presented complex file");
    auto* res_mod = c_res->add_option("--module", module_path, "Module file");
    res_cx->excludes(res_mod);
    c_res->add_option("--max-len", max_len, "Length cap for modules")->capture_default_str();

    auto* c_pd = app.add_subcommand("pd", "Projective dimension");
    common(c_pd, true);
    auto* pd_mod = c_pd->add_option("--module", module_path);
    auto* pd_id = c_pd->add_option("--ideal", ideal, "Ideal generators; computes pd S/I");
    pd_mod->excludes(pd_id);

    auto* c_grade = app.add_subcommand("grade", "Grade of an ideal");
    common(c_grade, true);
    c_grade->add_option("--ideal", ideal)->required();

    auto* c_perfect = app.add_subcommand("perfect", "Whether grade I = pd S/I");
    common(c_perfect, true);
    c_perfect->add_option("--ideal", ideal)->required();

    auto* c_reduce = app.add_subcommand("reduce", "Strong reducer of (X, f : X_m -> Q)");
    common(c_reduce, true);
    caps(c_reduce);
    c_reduce->add_option("--complex", complex_path)->required();
    c_reduce->add_option("--support", support)->required();
    c_reduce->add_option("--target", target_path)->required();
    c_reduce->add_option("--map", map_path)->required();
    c_reduce->add_option("--out-dir", out_dir, "Directory for T.json, alpha.json, report.json")->capture_default_str();

    auto* c_vsr = app.add_subcommand("verify-sr", "Re-check a stored strong reducer");
    common(c_vsr, true);
    c_vsr->add_option("--complex", complex_path)->required();
    c_vsr->add_option("--target", target_path)->required();
    c_vsr->add_option("--map", map_path)->required();
    c_vsr->add_option("--reducer", reducer_path, "T.json")->required();
    c_vsr->add_option("--alpha", alpha_path, "alpha.json")->required();

    auto* c_hom = app.add_subcommand("homology", "Graded homology dimensions");
    common(c_hom, true);
    c_hom->add_option("--complex", complex_path)->required();
    c_hom->add_option("--window", flags.window, "Internal degrees tmin:tmax");

    auto* c_stats = app.add_subcommand("stats", "min_c, max_c, supph, width");
    common(c_stats, true);
    c_stats->add_option("--complex", complex_path)->required();

    auto* c_frob = app.add_subcommand("frobenius", "pd of Frobenius powers");
    common(c_frob, true);
    c_frob->add_option("--ideal", ideal)->required();
    c_frob->add_option("--e-max", e_max, "Largest exponent")->capture_default_str();
    c_frob->add_flag("--efd", efd, "Also certify I^[q] in I^m");

    auto* c_accept = app.add_subcommand("accept", "Run the acceptance suite");
    common(c_accept, false);
    caps(c_accept);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return invalid;
    }

    try {
        Json config;
        if (!config_path.empty()) config = io::load_json(config_path);
        else if (std::filesystem::exists("kt.json")) config = io::load_json("kt.json");
        Settings settings = resolve_settings(flags, env, config);
        ReducerCaps rcaps;
        rcaps.n_cap = settings.n_cap;
        rcaps.u_cap = settings.u_cap;

        auto* sub = app.get_subcommands().front();
        std::string verb = sub->get_name();

        if (verb == "accept") {
            acceptance::Config cfg;
            cfg.n_cap = settings.n_cap;
            Json rows = Json::array();
            std::size_t failed = 0;
            acceptance::run_all(cfg, [&](const acceptance::Result& res) {
                if (!res.pass) ++failed;
                if (json) rows.push_back(Json{{"detail", res.detail}, {"id", res.id}, {"name", res.name}, {"pass", res.pass}});
                else out << acceptance::format_line(res) << std::endl;
            });
            if (json) out << io::dump(Json{{"criteria", rows}, {"failed", failed}});
            else out << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " of " + std::to_string(acceptance::criteria().size()) + " criteria fail") << '\n';
            return failed == 0 ? ok : check_failed;
        }

        GradedPolyRing R = detail::load_ring(ring_arg);
        auto load_free = [&](const std::string& path) { return io::complex_from_json(R, io::load_json(path), path); };

        if (verb == "koszul") {
            out << io::dump(io::to_json(R, koszul(R, detail::parse_elems(R, elems, "--elems")).complex));
        } else if (verb == "kappa") {
            auto f = detail::parse_elems(R, elems, "--elems");
            ChainMap k = kappa(R, n, m, f);
            Json j = io::to_json(R, k);
            j["source"] = io::to_json(R, k.source());
            j["target"] = io::to_json(R, k.target());
            out << io::dump(j);
        } else if (verb == "tate") {
            auto T = tate(R, detail::parse_elems(R, elems, "--elems"), max_len);
            if (!T.finished) throw SearchCapExhausted("tate", "not exact after " + std::to_string(max_len) + " steps");
            out << io::dump(io::to_json(R, T.complex));
        } else if (verb == "lift") {
            auto f = detail::parse_elems(R, elems, "--elems");
            int start = u_start > 0 ? u_start : r;
            auto L = tate_to_koszul_lift(R, f, r, start, settings.u_cap ? *settings.u_cap : 16 * r);
            L.phi.validate(R);
            Json j = io::to_json(R, L.phi);
            j["source"] = io::to_json(R, L.phi.source());
            j["target"] = io::to_json(R, L.phi.target());
            j["u"] = L.u;
            j["verified"] = true;
            out << io::dump(j);
        } else if (verb == "localcoh") {
            auto f = detail::parse_elems(R, elems, "--elems");
            PresentedModule M = module_path.empty() ? PresentedModule::free(GradedFreeModule({0})) : io::module_from_json(R, io::load_json(module_path), module_path);
            int lo = only_i ? *only_i : 0, hi = only_i ? *only_i : static_cast<int>(R.nvars());
            LcWindow w{lo, hi, settings.window.t_min, settings.window.t_max};
            std::size_t unstable = 0;
            Json j;
            if (method == "both") {
                auto c = compare_pipelines(R, f, M, w, settings.n_cap, depth);
                unstable = c.unstable.size();
                Json mm = Json::array();
                for (const auto& x : c.mismatches) mm.push_back(Json{{"ext", x.ext_dim}, {"i", x.i}, {"koszul", x.koszul_dim}, {"t", x.t}});
                j = Json{{"agree", c.agree()}, {"ext", detail::records_json(c.ext)}, {"koszul", detail::records_json(c.koszul)}, {"mismatches", mm}};
                if (!json) {
                    detail::print_table(out, c.koszul);
                    detail::print_table(out, c.ext);
                    out << (c.agree() ? "pipelines agree" : std::to_string(c.mismatches.size()) + " cells disagree") << '\n';
                }
                if (!c.mismatches.empty() && unstable == 0) {
                    if (json) out << io::dump(j);
                    err << "error: pipelines disagree on " << c.mismatches.size() << " cells\n";
                    return check_failed;
                }
            } else {
                auto t = method == "koszul" ? local_cohomology_koszul(R, f, M, w, settings.n_cap) : local_cohomology_ext_tate(R, f, M, w, depth, settings.u_cap);
                for (const auto& c : t.cells) unstable += c.stable ? 0 : 1;
                j = detail::records_json(t);
                if (!json) detail::print_table(out, t);
            }
            if (json) out << io::dump(j);
            if (unstable > 0) throw SearchCapExhausted("stabilization", std::to_string(unstable) + " cells did not stabilize within the caps");
        } else if (verb == "resolve") {
            if (!module_path.empty()) {
                auto res = free_resolution(R, io::module_from_json(R, io::load_json(module_path), module_path), max_len);
                if (!res.finished) throw SearchCapExhausted("resolve", "not finished after " + std::to_string(max_len) + " steps");
                out << io::dump(io::to_json(R, res.complex));
            } else if (!complex_path.empty()) {
                auto X = io::presented_complex_from_json(R, io::load_json(complex_path), complex_path);
                auto res = resolve_complex(R, X);
                Json pi = Json::object();
                for (const auto& [k, g] : res.pi)
                    if (!g.is_zero()) pi[std::to_string(k)] = io::rows_json(R, g);
                out << io::dump(Json{{"complex", io::to_json(R, res.P)}, {"pi", Json{{"maps", pi}}}});
            } else {
                throw ValidationError("one of --complex or --module is required", "resolve");
            }
        } else if (verb == "pd") {
            PresentedModule M;
            if (!module_path.empty()) M = io::module_from_json(R, io::load_json(module_path), module_path);
            else if (!ideal.empty()) M = PresentedModule::quotient(detail::parse_elems(R, ideal, "--ideal"));
            else throw ValidationError("one of --module or --ideal is required", "pd");
            int v = pd(R, M);
            if (json) out << io::dump(Json{{"pd", v}});
            else out << "pd = " << v << '\n';
        } else if (verb == "grade") {
            int g = grade(R, detail::parse_elems(R, ideal, "--ideal"));
            if (json) out << io::dump(Json{{"grade", g}});
            else out << "grade = " << g << '\n';
        } else if (verb == "perfect") {
            auto I = detail::parse_elems(R, ideal, "--ideal");
            int g = grade(R, I), p = pd(R, PresentedModule::quotient(I));
            if (json) out << io::dump(Json{{"grade", g}, {"pd", p}, {"perfect", g == p}});
            else out << "grade = " << g << ", pd = " << p << ", " << (g == p ? "perfect" : "not perfect") << '\n';
        } else if (verb == "reduce") {
            SupportedComplexInput in{load_free(complex_path), detail::parse_elems(R, support, "--support"),
                                     io::module_from_json(R, io::load_json(target_path), target_path), io::matrix_from_json(R, io::load_json(map_path), map_path)};
            auto sr = strong_reducer(R, in, rcaps);
            std::filesystem::path dir(out_dir);
            std::filesystem::create_directories(dir);
            Json rep = detail::report_json(sr.report);
            rep["e"] = sr.e;
            rep["m"] = sr.m;
            rep["n"] = sr.n;
            rep["q"] = sr.q;
            rep["u"] = sr.u;
            detail::write_file(dir / "T.json", io::dump(io::to_json(R, sr.T)));
            detail::write_file(dir / "alpha.json", io::dump(io::to_json(R, sr.alpha)));
            detail::write_file(dir / "report.json", io::dump(rep));
            if (json) out << io::dump(rep);
            else {
                out << "m = " << sr.m << ", n = " << sr.n << ", u = " << sr.u << ", q = " << sr.q << '\n';
                detail::print_report(out, sr.report);
            }
        } else if (verb == "verify-sr") {
            FreeComplex X = load_free(complex_path);
            FreeComplex T = load_free(reducer_path);
            ChainMap alpha = io::chain_map_from_json(R, io::load_json(alpha_path), T, X, alpha_path);
            auto rep = verify_strong_reducer(R, T, alpha, X, io::matrix_from_json(R, io::load_json(map_path), map_path),
                                             io::module_from_json(R, io::load_json(target_path), target_path));
            if (json) out << io::dump(detail::report_json(rep));
            else detail::print_report(out, rep);
            return rep.all() ? ok : check_failed;
        } else if (verb == "homology") {
            auto X = io::presented_complex_from_json(R, io::load_json(complex_path), complex_path);
            Json recs = Json::array();
            if (!json) out << std::setw(4) << "n" << std::setw(6) << "t" << std::setw(6) << "dim" << '\n';
            if (!X.terms.empty()) {
                bool free = is_free(X);
                FreeComplex F = free ? as_free_complex(R, X) : FreeComplex{};
                for (int k = X.terms.begin()->first; k <= X.terms.rbegin()->first; ++k)
                    for (int t = settings.window.t_min; t <= settings.window.t_max; ++t) {
                        std::size_t d = free ? homology_dims(R, F, k, t) : presented_homology_dims(R, X, k, t);
                        recs.push_back(Json{{"dim", d}, {"n", k}, {"t", t}});
                        if (!json) out << std::setw(4) << k << std::setw(6) << t << std::setw(6) << d << '\n';
                    }
            }
            if (json) out << io::dump(recs);
        } else if (verb == "stats") {
            auto X = io::presented_complex_from_json(R, io::load_json(complex_path), complex_path);
            Json s = detail::stats_json(complex_stats(R, X));
            if (json) out << io::dump(s);
            else {
                auto show = [](const Json& v) { return v.is_null() ? std::string("-") : v.dump(); };
                out << "min_c = " << show(s["min_c"]) << ", max_c = " << show(s["max_c"]) << ", min = " << show(s["min"]) << ", supph = " << s["supph"].dump()
                    << ", width = " << s["width"].get<int>() << '\n';
            }
        } else if (verb == "frobenius") {
            auto I = detail::parse_elems(R, ideal, "--ideal");
            auto rep = frobenius_pd_invariance(R, I, e_max);
            Json j{{"invariant", rep.invariant}, {"pd", rep.pds}};
            if (efd) {
                Json st = Json::array();
                for (const auto& s : efd_witness(R, I, e_max)) st.push_back(Json{{"e", s.e}, {"m", s.m}, {"pd", s.pd}, {"q", s.q}});
                j["efd"] = st;
            }
            if (json) out << io::dump(j);
            else {
                for (std::size_t e = 0; e < rep.pds.size(); ++e) out << "e = " << e << ": pd = " << rep.pds[e] << '\n';
                if (efd)
                    for (const auto& s : j["efd"]) out << "I^[" << s["q"].get<int>() << "] in I^" << s["m"].get<int>() << '\n';
                out << (rep.invariant ? "invariant" : "not invariant") << '\n';
            }
        }
        return ok;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return invalid;
    } catch (const SearchCapExhausted& e) {
        err << "search cap exhausted in " << e.what() << '\n';
        return cap_exhausted;
    }
}

} // namespace kt::cli
