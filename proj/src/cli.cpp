#include "carlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "carlab/crf.hpp"
#include "carlab/dbar.hpp"
#include "carlab/error.hpp"
#include "carlab/family.hpp"
#include "carlab/lab.hpp"
#include "carlab/norms.hpp"
#include "carlab/report.hpp"
#include "carlab/zoo.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace carlab {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {


struct Options {
    std::optional<int> n;
    std::optional<std::string> L;
    std::optional<double> p;
    std::optional<std::string> delta;
    std::string profile = "quintic_smoothstep";
    std::optional<std::string> k;
    std::optional<std::string> t;
    std::string out;
    std::string format = "json";
    std::uint32_t seed = 1;
    bool dump_fields = false;
    bool no_timestamp = false;

    std::optional<std::string> fn;
    std::optional<std::string> potential;
    std::optional<std::string> seed_field;
    std::optional<std::string> family;
    std::vector<std::string> add_member;
    std::optional<double> r;
    std::optional<double> r_inner;
    std::optional<double> exclusion;
    double tol = 1e-12;
    int max_iter = 100;
    double residual_tol = 1e-6;
    double clear_radius = 0.3;
    double ramp = 0.15;
    std::string c_fn = "bump:1,0,0.25";
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw Error("bad " + what + " value '" + text + "'");
}

/// Accepts plain reals and multiples of pi: "4", "pi", "32pi", "32*pi".
double parse_length(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        std::string head = s.substr(0, s.size() - 2);
        if (!head.empty() && head.back() == '*') head.pop_back();
        const double factor = head.empty() ? 1.0 : parse_real(head, "--L");
        return factor * std::numbers::pi;
    }
    return parse_real(s, "--L");
}

/// Comma list of values and begin:end:step ranges. A trailing "D" on a
/// token scales it by unit (the frequency spacing for --delta).
std::vector<double> parse_axis(const std::string& raw, const std::string& what,
                               std::optional<double> unit = std::nullopt) {
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string tok;
    auto value = [&](std::string v) {
        v = trim(v);
        if (unit && !v.empty() && (v.back() == 'D' || v.back() == 'd')) {
            v.pop_back();
            return (v.empty() ? 1.0 : parse_real(v, what)) * *unit;
        }
        return parse_real(v, what);
    };
    while (std::getline(ss, tok, ',')) {
        if (trim(tok).empty()) continue;
        if (tok.find(':') == std::string::npos) {
            out.push_back(value(tok));
            continue;
        }
        std::vector<std::string> parts;
        std::stringstream rs(tok);
        std::string part;
        while (std::getline(rs, part, ':')) parts.push_back(part);
        if (parts.size() != 3) throw Error(what + " range '" + tok + "' must be begin:end:step");
        const double b = value(parts[0]), e = value(parts[1]), st = value(parts[2]);
        if (!(st > 0.0) || e < b) throw Error(what + " range '" + tok + "' needs step > 0 and end >= begin");
        const double count = std::floor((e - b) / st + 1e-9);
        if (count > 1e6) throw Error(what + " range '" + tok + "' is too long");
        for (int i = 0; i <= static_cast<int>(count); ++i) out.push_back(b + i * st);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& raw, const std::string& what) {
    std::vector<int> out;
    for (double v : parse_axis(raw, what)) {
        if (v != std::round(v)) throw Error(what + " values must be integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

AnalyticField field_or_usage(const std::string& label) {
    try {
        return parse_field(label);
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + "\n" + registry_listing());
    }
}

Potential potential_or_usage(const std::string& label) {
    try {
        return parse_potential(label);
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + "\n" + registry_listing());
    }
}

struct Defaults {
    int n;
    std::string L;
    std::string delta;
    std::string k;
    std::string t;
};

Defaults defaults_for(const std::string& cmd) {
    if (cmd == "carleman-sweep") return {512, "4", "2D", "0", "0:16:1"};
    if (cmd == "solve-dbar") return {512, "4", "2D", "0", "0"};
    if (cmd == "uc-demo") return {512, "4", "2D", "0", "0:12:1"};
    if (cmd == "kernel-bound") return {1024, "32pi", "1D", "-3:3:1", "0"};
    if (cmd == "tk-ratio") return {1024, "32pi", "1D", "-2:2:1", "0"};
    if (cmd == "t-ratio") return {1024, "32pi", "4D,8D,16D", "-2", "0"};
    if (cmd == "lp-chain") return {1024, "32pi", "1D", "-2:2:1", "0"};
    return {1024, "32pi", "1D", "0", "0"};
}

/// Fully resolved run configuration; echoed into every report.
struct RunConfig {
    std::string command;
    GridSpec grid{16, 1.0};
    std::string L_text;
    Exponents exponents{4.0 / 3.0, 4.0};
    std::vector<double> deltas;
    CutoffProfile profile = CutoffProfile::quintic_smoothstep;
    std::vector<int> ks;
    std::vector<double> ts;
    std::string format;
    bool dump_fields = false;
    std::uint32_t seed = 1;
    json extra = json::object();

    MultiplierSpec spec() const {
        if (deltas.size() != 1) throw Error(command + " takes a single --delta value");
        return {deltas.front(), profile};
    }

    json to_json() const {
        return {{"command", command},
                {"grid", {{"n", grid.n()}, {"L", grid.half_width()}, {"L_text", L_text}}},
                {"exponents", {{"p", exponents.p()}, {"q", exponents.q()}}},
                {"multiplier", {{"delta", deltas}, {"profile", carlab::to_string(profile)}}},
                {"k", ks},
                {"t", ts},
                {"io", {{"format", format}, {"dump_fields", dump_fields}}},
                {"seed", seed},
                {"command_options", extra}};
    }
};

RunConfig resolve(const std::string& cmd, const Options& o) {
    const Defaults d = defaults_for(cmd);
    RunConfig c;
    c.command = cmd;
    c.L_text = o.L.value_or(d.L);
    c.grid = make_grid(o.n.value_or(d.n), parse_length(c.L_text));
    c.exponents = Exponents::from_p(o.p.value_or(4.0 / 3.0));
    c.deltas = parse_axis(o.delta.value_or(d.delta), "--delta", c.grid.freq_spacing());
    if (c.deltas.empty()) throw Error("empty --delta list");
    for (double v : c.deltas) {
        if (!(v > 0.0)) throw Error("--delta values must be positive");
    }
    c.profile = parse_profile(o.profile);
    c.ks = parse_ints(o.k.value_or(d.k), "--k");
    c.ts = parse_axis(o.t.value_or(d.t), "--t");
    for (double t : c.ts) {
        if (t < 0.0) throw Error("--t values must be nonnegative");
    }
    if (o.format != "json" && o.format != "csv") throw Error("--format must be json or csv");
    c.format = o.format;
    c.dump_fields = o.dump_fields;
    c.seed = o.seed;
    return c;
}

struct Outcome {
    std::vector<VerificationReport> reports;
    json result = json::object();
    std::vector<std::pair<std::string, Field>> dumps;
    std::vector<std::string> messages;
    bool fail = false;
};

bool all_pass(const Outcome& o) {
    return !o.fail && std::all_of(o.reports.begin(), o.reports.end(),
                                  [](const VerificationReport& r) { return r.pass; });
}

// Commands -------------------------------------------------------------------

Outcome cmd_carleman(RunConfig& c, const Options& o) {
    if (!o.fn) throw Error("carleman-sweep needs --fn <label>\n" + registry_listing());
    const AnalyticField f = field_or_usage(*o.fn);
    c.extra["fn"] = *o.fn;
    Outcome out;
    out.reports.push_back(carleman_sweep(f, c.ts, c.exponents, c.grid));
    return out;
}

Outcome cmd_kernel_bound(RunConfig& c, const Options&) {
    if (c.ks.empty()) throw Error("kernel-bound needs a nonempty --k list");
    const auto [lo, hi] = std::minmax_element(c.ks.begin(), c.ks.end());
    c.extra["lp"] = {{"k_min", *lo}, {"k_max", *hi}};
    Outcome out;
    out.reports.push_back(kernel_bound_sweep(c.spec(), lp_family(*lo, *hi), c.ks, c.grid));
    return out;
}

std::vector<TestInput> extra_members(const RunConfig& c, const Options& o) {
    std::vector<TestInput> out;
    for (const std::string& label : o.add_member) {
        for (TestInput& in : parse_inputs(label, c.grid, c.seed)) out.push_back(std::move(in));
    }
    return out;
}

Outcome cmd_tk_ratio(RunConfig& c, const Options& o) {
    if (c.ks.empty()) throw Error("tk-ratio needs a nonempty --k list");
    const auto [lo, hi] = std::minmax_element(c.ks.begin(), c.ks.end());
    c.extra["lp"] = {{"k_min", *lo}, {"k_max", *hi}};
    c.extra["family"] = o.family.value_or("standard");
    c.extra["add_member"] = o.add_member;
    const std::vector<TestInput> added = extra_members(c, o);
    std::optional<std::vector<TestInput>> fixed;
    if (o.family && *o.family != "standard") fixed = parse_inputs(*o.family, c.grid, c.seed);
    const FamilyBuilder build = [&](int k) {
        std::vector<TestInput> fam = fixed ? *fixed : standard_family(c.grid, k, c.seed);
        fam.insert(fam.end(), added.begin(), added.end());
        return fam;
    };
    Outcome out;
    out.reports.push_back(tk_uniformity(c.spec(), lp_family(*lo, *hi), c.ks, c.exponents, build));
    return out;
}

Outcome cmd_t_ratio(RunConfig& c, const Options& o) {
    if (c.ks.size() != 1) throw Error("t-ratio takes a single --k: the band scale of the standard family");
    c.extra["family"] = o.family.value_or("standard");
    c.extra["add_member"] = o.add_member;
    std::vector<TestInput> fam = (o.family && *o.family != "standard")
                                     ? parse_inputs(*o.family, c.grid, c.seed)
                                     : standard_family(c.grid, c.ks.front(), c.seed);
    for (TestInput& in : extra_members(c, o)) fam.push_back(std::move(in));
    Outcome out;
    out.reports.push_back(t_operator_ratio(c.exponents, fam, c.deltas, c.profile));
    return out;
}

Outcome cmd_lp_chain(RunConfig& c, const Options& o) {
    if (c.ks.empty()) throw Error("lp-chain needs a nonempty --k list");
    const auto [lo, hi] = std::minmax_element(c.ks.begin(), c.ks.end());
    const std::string label = o.fn.value_or("bands:-1,0,1");
    c.extra["fn"] = label;
    c.extra["lp"] = {{"k_min", *lo}, {"k_max", *hi}};
    Field h = label.rfind("bands:", 0) == 0 || label.rfind("ring:", 0) == 0 || label == "noise"
                  ? make_input(label, c.grid, c.seed)
                  : sample(c.grid, field_or_usage(label));
    Outcome out;
    VerificationReport rep = lp_chain_report(h, c.spec(), lp_family(*lo, *hi), c.exponents);
    for (const char* name : {"minkowski_q", "minkowski_p"}) {
        const Bound& b = rep.bound(name);
        if (!b.holds()) {
            out.messages.push_back(std::string("BUG: ") + name + " link ratio " +
                                   std::to_string(b.constant.value) +
                                   " exceeds 1 + 1e-9; discrete Minkowski cannot fail");
        }
    }
    out.reports.push_back(std::move(rep));
    return out;
}

/// Entire seeds only: one | zero | poly:c0,c1,... (sum c_j z^j, real
/// coefficients). The box edge breaks holomorphy of non-constant
/// polynomials; the solution reports it as seed_defect.
Field seed_field(const std::string& label, const GridSpec& g) {
    if (label == "one") return sample(g, [](cplx) -> cplx { return 1.0; });
    if (label == "zero") return Field(g, Space::position);
    if (label.rfind("poly:", 0) == 0) {
        const std::vector<double> coef = parse_axis(label.substr(5), "poly coefficient");
        if (coef.empty()) throw Error("poly seed needs at least one coefficient");
        return sample(g, [coef](cplx z) {
            cplx acc = 0.0;
            for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * z + *it;
            return acc;
        });
    }
    throw Error("unknown Picard seed '" + label + "' (one | zero | poly:c0,c1,...)");
}

Outcome cmd_solve_dbar(RunConfig& c, const Options& o) {
    if (!o.potential) throw Error("solve-dbar needs --potential <label>\n" + registry_listing());
    const Potential v = potential_or_usage(*o.potential);
    const std::string seed_label = o.seed_field.value_or("one");
    c.extra["potential"] = *o.potential;
    c.extra["seed_field"] = seed_label;
    c.extra["tol"] = o.tol;
    c.extra["max_iter"] = o.max_iter;
    c.extra["residual_tol"] = o.residual_tol;
    const Field seed = seed_field(seed_label, c.grid);
    PicardOptions opts;
    opts.tol = o.tol;
    opts.max_iter = o.max_iter;
    opts.power_seed = c.seed;

    Outcome out;
    DbarSolution sol = picard_solve(v, seed, c.spec(), opts);
    VerificationReport rep;
    rep.check = "picard_solve";
    rep.parameters = {{"potential", v.label}, {"seed_field", seed_label}};
    const double interior = c.grid.half_width() - sol.interior_margin;
    const double u_norm = lp_norm(sol.u, 2.0);
    const double floor = 1e-10 * std::max(1.0, lp_norm(sol.u, INFINITY));
    const double slack = 10.0 * sol.equation_residual * u_norm / c.grid.spacing() + floor;
    const WitnessReport w = inequality_witness(sol.u, v, slack, interior);
    rep.add_scalar("contraction_estimate", sol.contraction_estimate, kContractionLimit, CapProvenance::analytic);
    rep.add_scalar("residual", sol.residual, o.residual_tol, CapProvenance::analytic);
    rep.add_scalar("witness_violation", w.max_violation, slack, CapProvenance::analytic);
    std::vector<SweepPoint> updates;
    for (std::size_t i = 0; i < sol.update_norms.size(); ++i) {
        updates.push_back({double(i + 1), sol.update_norms[i], "iteration " + std::to_string(i + 1)});
    }
    rep.observations.push_back(
        EmpiricalConstant::from_series("update_norm", SweepAxis::none, std::move(updates)));
    if (!sol.monotone_updates) rep.notes.push_back("update norms increased at some iteration");
    rep.notes.push_back("residual is the fixed-point defect; equation_residual includes the low "
                        "frequencies removed by the cutoff");
    rep.finalize();
    out.result = {{"solution", to_json(sol)}, {"witness", to_json(w)}};
    out.reports.push_back(std::move(rep));
    out.dumps.emplace_back("u", sol.u);
    out.dumps.emplace_back("V", sol.potential);
    return out;
}

Outcome cmd_uc_demo(RunConfig& c, const Options& o) {
    const std::string vlabel = o.potential.value_or("vring:0.5,1,1.5");
    const Potential v = potential_or_usage(vlabel);
    const double r = o.r.value_or(0.2);
    const double r_inner = o.r_inner.value_or(0.1);
    const double exclusion = o.exclusion.value_or(2.0 * c.grid.spacing());
    c.extra["potential"] = vlabel;
    c.extra["r"] = r;
    c.extra["r_inner"] = r_inner;
    c.extra["exclusion_radius"] = exclusion;
    c.extra["carleman_fn"] = o.c_fn;
    c.extra["seed_field"] = o.seed_field.value_or("vanishing");
    c.extra["clear_radius"] = o.clear_radius;
    c.extra["ramp"] = o.ramp;
    c.extra["tol"] = o.tol;
    c.extra["max_iter"] = o.max_iter;

    Outcome out;
    VerificationReport sweep = carleman_sweep(field_or_usage(o.c_fn), c.ts, c.exponents, c.grid);
    const EmpiricalConstant c_hat = sweep.bound("carleman_ratio").constant;
    const std::string provenance = "carleman_sweep " + o.c_fn + " on this grid";
    out.reports.push_back(sweep);

    std::optional<Field> u;
    json construction = json::object();
    if (o.seed_field) {
        u = sample(c.grid, field_or_usage(*o.seed_field));
        construction = {{"kind", "sampled"}, {"label", *o.seed_field}};
    } else {
        PicardOptions opts;
        opts.tol = o.tol;
        opts.max_iter = o.max_iter;
        opts.power_seed = c.seed;
        DbarSolution sol = vanishing_solution(v, c.grid, c.spec(), o.clear_radius, o.ramp, opts);
        construction = {{"kind", "masked_picard"}, {"solution", to_json(sol)}};
        u = std::move(sol.u);
    }

    const BootstrapTrace tr = uc_bootstrap(*u, v, c.exponents, r, c.ts, c_hat, provenance, exclusion);
    VerificationReport rep;
    rep.check = "uc_bootstrap";
    rep.parameters = {{"potential", vlabel}, {"r", r}, {"r_inner", r_inner}};
    rep.add_scalar("absorption_term", tr.c_hat * tr.v_ball_norm, 0.5, CapProvenance::analytic);
    rep.notes.push_back("smallness is certified on balls around the origin only; the connectedness "
                        "step to global vanishing is out of scope");
    out.result = {{"construction", construction}, {"trace", to_json(tr)}};
    if (tr.r_too_large) {
        const double r_max = largest_absorbing_radius(v, c.grid, tr.c_hat);
        out.result["suggested_r_max"] = r_max;
        out.messages.push_back("absorption margin " + std::to_string(tr.absorption_margin) +
                               " <= 0: r too large; largest r with positive margin is about " +
                               std::to_string(r_max));
    } else {
        std::vector<SweepPoint> series;
        for (const auto& [t, a] : tr.a_series) {
            const double ratio = tr.rhs_bound > 0.0 ? a / tr.rhs_bound : (a == 0.0 ? 0.0 : INFINITY);
            series.push_back({t, ratio, "A(t)/rhs"});
        }
        rep.add_bound(EmpiricalConstant::from_series("A_over_rhs", SweepAxis::t, std::move(series)),
                      1.0 + kBoundSlack, CapProvenance::analytic);
        if (tr.geometric_divergence) {
            rep.notes.push_back("geometric divergence: A(t+1)/A(t) >= 1.5 over the upper half of the t range");
            out.messages.push_back("A(t) diverges geometrically: u does not vanish near the origin");
        }
        const double direct = ball_sup(*u, r_inner);
        const SupBound sb = vanishing_detector(tr, r_inner);
        const double consistency = sb.value > 0.0 ? direct / sb.value : (direct == 0.0 ? 0.0 : INFINITY);
        rep.add_scalar("direct_over_certified_sup", consistency, 1.0, CapProvenance::analytic);
        rep.metrics["certified_sup"] = sb.value;
        rep.metrics["direct_sup"] = direct;
        out.result["sup_bound"] = to_json(sb);
        out.result["direct_sup"] = direct;
    }
    rep.finalize();
    out.reports.push_back(std::move(rep));
    out.dumps.emplace_back("u", std::move(*u));
    return out;
}

Outcome cmd_grid_info(RunConfig& c, const Options&) {
    const GridSpec& g = c.grid;
    json bands = json::array();
    for (int k = -12; k <= 12; ++k) {
        const DyadicBand b{k, std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k + 1)};
        if (spectral_band_resolvable(g, b)) {
            bands.push_back({{"k", k}, {"kernel_resolvable", kernel_band_resolvable(g, b)}});
        }
    }
    Outcome out;
    out.result = {{"n", g.n()},
                  {"L", g.half_width()},
                  {"h", g.spacing()},
                  {"Delta", g.freq_spacing()},
                  {"nyquist", g.nyquist()},
                  {"origin_index", g.origin_index()},
                  {"resolvable_bands", bands}};
    return out;
}

// Output ---------------------------------------------------------------------

void write_atomic(const fs::path& path, const std::string& bytes) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot write " + tmp.string());
        f << bytes;
        if (!f.flush()) throw Error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string render(const RunConfig& c, const Outcome& o, int code, bool stamp) {
    if (c.format == "csv") {
        std::string s = csv_header();
        for (const auto& r : o.reports) s += to_csv(r);
        return s;
    }
    json reports = json::array();
    for (const auto& r : o.reports) reports.push_back(to_json(r));
    json doc = {{"schema", kReportSchema},
                {"command", c.command},
                {"config", c.to_json()},
                {"reports", std::move(reports)},
                {"result", o.result},
                {"messages", o.messages},
                {"status", code == 0 ? "pass" : "fail"},
                {"exit_code", code}};
    if (stamp) doc["generated_at"] = timestamp();
    return doc.dump(2) + "\n";
}

int emit(const RunConfig& c, const Options& opt, const Outcome& o, int code, std::ostream& out,
         std::ostream& err) {
    for (const auto& m : o.messages) err << m << "\n";
    const std::string body = render(c, o, code, !opt.no_timestamp);
    const std::string cfg = c.to_json().dump();
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a(cfg);
    const std::string stem = c.command + "-" + hash.str();

    fs::path dir;
    if (opt.out.empty()) {
        out << body;
        dir = fs::current_path();
    } else {
        fs::path target = opt.out;
        const bool is_dir = fs::is_directory(target) || opt.out.back() == '/';
        if (is_dir) {
            target /= stem + "." + c.format;
            dir = opt.out;
        } else {
            dir = target.has_parent_path() ? target.parent_path() : fs::current_path();
        }
        write_atomic(target, body);
        out << "wrote " << target.string() << "\n";
    }
    if (c.dump_fields) {
        for (const auto& [name, field] : o.dumps) {
            const fs::path p = dir / (stem + "-" + name + ".crf");
            save_crf(p.string(), field);
            out << "wrote " << p.string() << "\n";
        }
    }
    err << (code == 0 ? "PASS " : "FAIL ") << c.command << "\n";
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"carlab: numerical laboratory for the Carleman estimate and dbar unique continuation"};
    app.set_config("--config", "", "flat key=value file; command-line flags override it");
    app.require_subcommand(1);
    // Config values such as fn = bump:1,0,0.25 arrive split at commas;
    // options carrying lists rejoin them.
    Options o;
    app.add_option("--n", o.n, "grid points per axis (power of two >= 16)");
    app.add_option("--L", o.L, "box half-width, plain or a multiple of pi such as 32pi");
    app.add_option("--p", o.p, "Lebesgue exponent 1 < p < 2; q follows from 1/p - 1/q = 1/2");
    app.add_option("--delta", o.delta, "cutoff scale(s); a D suffix means multiples of the frequency spacing")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--profile", o.profile, "cutoff profile: quintic_smoothstep | exp_mollifier");
    app.add_option("--k", o.k, "band indices: list or begin:end:step")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--t", o.t, "weight exponents: list or begin:end:step")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--out", o.out, "report file, or a directory for config-hash names");
    app.add_option("--format", o.format, "json | csv");
    app.add_option("--seed", o.seed, "random seed");
    app.add_flag("--dump-fields", o.dump_fields, "write CRF1 field dumps next to the report");
    app.add_flag("--no-timestamp", o.no_timestamp, "omit the generation time (byte-stable reports)");
    app.add_option("--fn", o.fn, "function label (see grid-info --help for the registry)")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--potential", o.potential, "potential label")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--seed-field", o.seed_field, "Picard seed (one | zero | poly:c0,c1,...); uc-demo: zoo label replacing u")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--family", o.family, "test family: standard | standard:k | input label")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--add-member", o.add_member, "extra test family member (repeatable)");
    app.add_option("--r", o.r, "bootstrap ball radius");
    app.add_option("--r-inner", o.r_inner, "radius of the certified sup bound");
    app.add_option("--exclusion", o.exclusion, "exclusion disk radius (default 2h)");
    app.add_option("--tol", o.tol, "Picard update tolerance");
    app.add_option("--max-iter", o.max_iter, "Picard iteration cap");
    app.add_option("--residual-tol", o.residual_tol, "accepted Picard residual");
    app.add_option("--clear-radius", o.clear_radius, "radius on which the constructed solution vanishes");
    app.add_option("--ramp", o.ramp, "width of the mask ramp outside the clear radius");
    app.add_option("--carleman-fn", o.c_fn, "function whose Carleman sweep supplies the constant");

    const char* names[] = {"carleman-sweep", "kernel-bound", "tk-ratio", "t-ratio",
                           "lp-chain",       "solve-dbar",   "uc-demo",  "grid-info"};
    const char* help[] = {"Carleman ratio over t", "kernel L2 bound per band",
                          "dyadic operator ratio across k", "full operator ratio across delta",
                          "Littlewood-Paley chain", "Picard solve of dbar u = V u",
                          "unique continuation bootstrap", "grid geometry and resolvable bands"};
    for (int i = 0; i < 8; ++i) app.add_subcommand(names[i], help[i])->fallthrough();
    app.footer(registry_listing());

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    std::optional<RunConfig> cfg;
    Outcome outcome;
    try {
        cfg = resolve(cmd, o);
        if (cmd == "carleman-sweep") outcome = cmd_carleman(*cfg, o);
        else if (cmd == "kernel-bound") outcome = cmd_kernel_bound(*cfg, o);
        else if (cmd == "tk-ratio") outcome = cmd_tk_ratio(*cfg, o);
        else if (cmd == "t-ratio") outcome = cmd_t_ratio(*cfg, o);
        else if (cmd == "lp-chain") outcome = cmd_lp_chain(*cfg, o);
        else if (cmd == "solve-dbar") outcome = cmd_solve_dbar(*cfg, o);
        else if (cmd == "uc-demo") outcome = cmd_uc_demo(*cfg, o);
        else outcome = cmd_grid_info(*cfg, o);
    } catch (const ContractionError& e) {
        err << "contraction refused: " << e.what() << "\n";
        Outcome refused;
        refused.fail = true;
        VerificationReport rep;
        rep.check = "picard_solve";
        rep.add_scalar("contraction_estimate", e.estimate(), kContractionLimit, CapProvenance::analytic);
        rep.finalize();
        refused.reports.push_back(std::move(rep));
        refused.result = {{"contraction_estimate", e.estimate()}};
        refused.messages.push_back(e.what());
        return emit(*cfg, o, refused, 1, out, err);
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << "\n";
        Outcome failed;
        failed.fail = true;
        failed.result = {{"iterations", e.iterations()}};
        failed.messages.push_back(e.what());
        return emit(*cfg, o, failed, 1, out, err);
    } catch (const LeakageError& e) {
        err << "error: " << e.what() << " (leakage " << e.leakage() << ")\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const int code = all_pass(outcome) ? 0 : 1;
    try {
        return emit(*cfg, o, outcome, code, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace carlab
