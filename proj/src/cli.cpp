#include "satrees/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "satrees/counting.hpp"
#include "satrees/fitting.hpp"
#include "satrees/geometry.hpp"
#include "satrees/regularity.hpp"
#include "satrees/saturation.hpp"
#include "satrees/selfcheck.hpp"
#include "satrees/workspace.hpp"

namespace satrees {

namespace {

Workspace load_workspace(const std::string& path) {
    if (path.empty()) fail(ErrKind::usage, "this command needs --workspace FILE");
    std::ifstream in(path);
    if (!in) fail(ErrKind::usage, "cannot open workspace '" + path + "'");
    return parse_workspace(in);
}

const IdealFamily& family_of(const Workspace& ws, const std::string& name) {
    auto it = ws.families.find(name);
    if (it == ws.families.end()) fail(ErrKind::usage, "unknown family '" + name + "'");
    return it->second;
}

const MonomialIdeal& ideal_of(const Workspace& ws, const std::string& name) {
    auto it = ws.ideals.find(name);
    if (it == ws.ideals.end()) fail(ErrKind::usage, "unknown ideal '" + name + "'");
    return it->second;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Expo parse_expo(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || v > std::numeric_limits<Expo>::max())
            throw std::invalid_argument(text);
        return static_cast<Expo>(v);
    } catch (const std::exception&) {
        fail(ErrKind::usage, "bad " + what + " '" + text + "'");
    }
}

MultiIndex parse_multiindex(const std::string& text, int arity) {
    MultiIndex n;
    for (const std::string& part : split(text, ','))
        n.push_back(parse_expo(part, "multi-index entry"));
    if (static_cast<int>(n.size()) != arity)
        fail(ErrKind::usage, "multi-index '" + text + "' does not match the family arity " +
                                 std::to_string(arity));
    return n;
}

std::vector<std::pair<Expo, Expo>> parse_grid(const std::string& text, int arity) {
    std::vector<std::pair<Expo, Expo>> ranges;
    for (const std::string& part : split(text, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos)
            fail(ErrKind::usage, "grid range '" + part + "' must look like a..b");
        Expo lo = parse_expo(part.substr(0, dots), "grid bound");
        Expo hi = parse_expo(part.substr(dots + 2), "grid bound");
        if (lo > hi) fail(ErrKind::usage, "grid range '" + part + "' has lo > hi");
        ranges.emplace_back(lo, hi);
    }
    if (ranges.size() == 1 && arity > 1) ranges.assign(static_cast<size_t>(arity), ranges[0]);
    if (static_cast<int>(ranges.size()) != arity)
        fail(ErrKind::usage, "grid '" + text + "' does not match the family arity " +
                                 std::to_string(arity));
    return ranges;
}

LengthTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrKind::usage, "cannot open table '" + path + "'");
    return LengthTable::from_csv(in);
}

std::string index_str(const MultiIndex& n) {
    std::string out = "(";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(n[i]);
    }
    return out + ")";
}

// A ray table is t * w for a fixed primitive direction w.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ray_samples(const LengthTable& table) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
    if (table.domain.empty()) fail(ErrKind::usage, "table is empty");
    MultiIndex w = table.domain.front();
    Expo g = std::accumulate(w.begin(), w.end(), Expo(0),
                             [](Expo a, Expo b) { return std::gcd(a, b); });
    if (g == 0) fail(ErrKind::usage, "ray direction cannot be zero");
    for (auto& e : w) e /= g;
    std::uint64_t w_norm = norm(w);
    for (const MultiIndex& n : table.domain) {
        std::uint64_t t = norm(n) / w_norm;
        MultiIndex expect(w.size());
        for (size_t i = 0; i < w.size(); ++i)
            expect[i] = static_cast<Expo>(t * w[i]);
        if (expect != n || t == 0) fail(ErrKind::usage, "table domain is not a ray t*w");
        const LengthValue& v = table.values.at(n);
        if (v.infinite) fail(ErrKind::domain, "infinite value on the ray at t=" +
                                                  std::to_string(t));
        samples.emplace_back(t, v.count);
    }
    return samples;
}

struct Options {
    std::string workspace;
    std::string name;
    std::string n_text;
    std::string grid_text;
    std::string mode = "torsion";
    std::string out_path;
    std::string json_path;
    std::string csv_path;
    std::string suite = "all";
    std::string betti_out;
    unsigned max_degree = 0;
    bool max_degree_set = false;
    unsigned max_period = 1;
    Expo start = 0;
    bool start_set = false;
    Expo bound = 0;
    bool saturated = false;
    bool closure = false;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    if (command == "check") {
        std::vector<CheckResult> results = run_suite(opt.suite);
        int failures = 0;
        for (const CheckResult& r : results) {
            if (r.pass) {
                out << "[ok] " << r.suite << "/" << r.name << "\n";
            } else {
                out << "[FAIL] " << r.suite << "/" << r.name << ": " << r.detail << "\n";
                ++failures;
            }
        }
        out << (failures == 0 ? "all properties passed" : "failing properties: " +
                                                              std::to_string(failures))
            << "\n";
        return failures == 0 ? 0 : 1;
    }

    if (command == "fit") {
        LengthTable table = read_table(opt.csv_path);
        std::optional<Expo> n0;
        if (opt.start_set) n0 = opt.start;
        auto fit = fit_polynomial(table, opt.max_degree, n0);
        if (!fit) {
            out << "NO_FIT\n";
            return 0;
        }
        out << fit->to_formula() << "\n";
        if (!opt.json_path.empty()) {
            std::ofstream jf(opt.json_path);
            if (!jf) fail(ErrKind::usage, "cannot write '" + opt.json_path + "'");
            jf << fit->to_json() << "\n";
        }
        return 0;
    }

    if (command == "fitray") {
        LengthTable table = read_table(opt.csv_path);
        auto fit = fit_quasipolynomial_ray(ray_samples(table), opt.max_period, opt.max_degree,
                                           opt.start_set ? opt.start : 1);
        if (!fit) {
            out << "NO_FIT\n";
            return 0;
        }
        out << "period " << fit->period << "\n";
        for (unsigned c = 0; c < fit->period; ++c)
            out << "class t=" << c << " (mod " << fit->period
                << "): " << fit->classes[c].to_formula("t") << "\n";
        if (!opt.json_path.empty()) {
            std::ofstream jf(opt.json_path);
            if (!jf) fail(ErrKind::usage, "cannot write '" + opt.json_path + "'");
            jf << fit->to_json() << "\n";
        }
        return 0;
    }

    Workspace ws = load_workspace(opt.workspace);

    if (command == "saturate") {
        const IdealFamily& family = family_of(ws, opt.name);
        MultiIndex n = parse_multiindex(opt.n_text, family.arity());
        out << to_string(saturate_certified(family, n)) << "\n";
        return 0;
    }

    if (command == "table") {
        const IdealFamily& family = family_of(ws, opt.name);
        std::vector<MultiIndex> grid = grid_points(parse_grid(opt.grid_text, family.arity()));
        LengthTable table;
        if (opt.mode == "torsion") {
            table = length_table(family, grid, TableMode::torsion);
        } else if (opt.mode.rfind("quotient:", 0) == 0) {
            const IdealFamily& outer = family_of(ws, opt.mode.substr(9));
            table = length_table(family, grid, TableMode::quotient, &outer);
        } else {
            fail(ErrKind::usage, "mode must be torsion or quotient:NAME");
        }
        if (opt.out_path.empty()) {
            table.to_csv(out);
        } else {
            std::ofstream file(opt.out_path);
            if (!file) fail(ErrKind::usage, "cannot write '" + opt.out_path + "'");
            table.to_csv(file);
        }
        return 0;
    }

    if (command == "bounds") {
        const IdealFamily& family = family_of(ws, opt.name);
        std::vector<MultiIndex> grid = grid_points(parse_grid(opt.grid_text, family.arity()));
        unsigned dim = static_cast<unsigned>(family.ring.dim());
        unsigned max_degree = opt.max_degree_set ? opt.max_degree : dim;
        LengthTable table = length_table(family, grid, TableMode::torsion);
        std::optional<Expo> n0;
        if (opt.start_set) n0 = opt.start;
        auto fit = fit_polynomial(table, max_degree, n0);
        if (!fit) {
            out << "fit: NO_FIT\n";
            return 1;
        }
        MonomialIdeal product =
            multi_power(family.ideals, MultiIndex(static_cast<size_t>(family.arity()), 1));
        unsigned spread = analytic_spread(product);
        out << "fit: " << fit->to_formula() << "\n";
        out << check_bounds(*fit, spread, dim).to_text();
        return 0;
    }

    if (command == "alpha") {
        const IdealFamily& family = family_of(ws, opt.name);
        AlphaReport report = alpha_stabilization(family, opt.bound);
        for (const auto& [n, k] : report.table)
            out << "n=" << index_str(n) << " k=" << k << "\n";
        out << "alpha_emp=" << report.alpha_emp << "\n";
        return 0;
    }

    if (command == "gens") {
        const IdealFamily& family = family_of(ws, opt.name);
        auto degrees = rees_generation_degrees(family, opt.bound);
        for (const auto& [n, fresh] : degrees)
            out << "n=" << index_str(n) << " new=" << fresh << "\n";
        out << "standard-graded up to " << opt.bound << ": "
            << (standard_graded(degrees) ? "yes" : "no") << "\n";
        return 0;
    }

    if (command == "newton") {
        NewtonPolyhedron np = newton_polyhedron(ideal_of(ws, opt.name));
        out << "vertices: ";
        for (size_t i = 0; i < np.vertices.size(); ++i) {
            if (i) out << ", ";
            out << monomial_to_string(np.ring, np.vertices[i]);
        }
        out << "\n";
        return 0;
    }

    if (command == "spread") {
        auto fam_it = ws.families.find(opt.name);
        if (fam_it != ws.families.end()) {
            const IdealFamily& family = fam_it->second;
            MonomialIdeal product =
                multi_power(family.ideals, MultiIndex(static_cast<size_t>(family.arity()), 1));
            out << "product-spread: " << analytic_spread(product) << "\n";
            out << "multi-spread: " << multi_analytic_spread(family.ideals) << "\n";
        } else {
            out << analytic_spread(ideal_of(ws, opt.name)) << "\n";
        }
        return 0;
    }

    if (command == "closure") {
        out << to_string(integral_closure(ideal_of(ws, opt.name))) << "\n";
        return 0;
    }

    if (command == "reg") {
        const MonomialIdeal& ideal = ideal_of(ws, opt.name);
        out << regularity(ideal) << "\n";
        if (!opt.betti_out.empty()) {
            std::ofstream file(opt.betti_out);
            if (!file) fail(ErrKind::usage, "cannot write '" + opt.betti_out + "'");
            file << koszul_betti(ideal).to_csv();
        }
        return 0;
    }

    if (command == "regtable") {
        const IdealFamily& family = family_of(ws, opt.name);
        std::vector<MultiIndex> grid = grid_points(parse_grid(opt.grid_text, family.arity()));
        out << linear_bound_check(family, grid, opt.saturated, opt.closure).to_text();
        return 0;
    }

    if (command == "decompose") {
        for (const MonomialIdeal& comp : irreducible_decomposition(ideal_of(ws, opt.name)))
            out << to_string(comp) << "\n";
        return 0;
    }

    fail(ErrKind::usage, "unknown command '" + command + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact monomial-ideal saturation, asymptotics and regularity toolkit",
                 "satrees"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("-w,--workspace", opt.workspace, "workspace file");

    auto* saturate = app.add_subcommand("saturate", "generators of I^n : J^inf");
    saturate->add_option("family", opt.name)->required();
    saturate->add_option("--n", opt.n_text, "multi-index, e.g. 2,1")->required();

    auto* table = app.add_subcommand("table", "length table over a grid (CSV)");
    table->add_option("family", opt.name)->required();
    table->add_option("--grid", opt.grid_text, "ranges a..b per axis")->required();
    table->add_option("--mode", opt.mode, "torsion | quotient:FAMILY");
    table->add_option("--out", opt.out_path, "output file (default stdout)");

    auto* fit = app.add_subcommand("fit", "exact polynomial fit of a table");
    fit->add_option("csv", opt.csv_path)->required();
    auto* fit_deg = fit->add_option("--max-degree", opt.max_degree)->required();
    auto* fit_start = fit->add_option("--start", opt.start, "first n of the eventual regime");
    fit->add_option("--json", opt.json_path, "also write the fit as JSON");

    auto* fitray = app.add_subcommand("fitray", "quasi-polynomial fit along a ray");
    fitray->add_option("csv", opt.csv_path)->required();
    fitray->add_option("--max-period", opt.max_period)->required();
    auto* fitray_deg = fitray->add_option("--max-degree", opt.max_degree)->required();
    auto* fitray_start = fitray->add_option("--start", opt.start, "smallest t used");
    fitray->add_option("--json", opt.json_path, "also write the fit as JSON");

    auto* bounds = app.add_subcommand("bounds", "degree-vs-spread report for a torsion table");
    bounds->add_option("family", opt.name)->required();
    bounds->add_option("--grid", opt.grid_text)->required();
    auto* bounds_deg = bounds->add_option("--max-degree", opt.max_degree);
    auto* bounds_start = bounds->add_option("--start", opt.start);

    auto* alpha = app.add_subcommand("alpha", "colon stabilization exponents k(n)");
    alpha->add_option("family", opt.name)->required();
    alpha->add_option("--norm-bound", opt.bound)->required();

    auto* gens = app.add_subcommand("gens", "new algebra generators per degree");
    gens->add_option("family", opt.name)->required();
    gens->add_option("--up-to", opt.bound)->required();

    auto* newton = app.add_subcommand("newton", "Newton polyhedron vertices");
    newton->add_option("ideal", opt.name)->required();

    auto* spread = app.add_subcommand("spread", "analytic spread");
    spread->add_option("name", opt.name)->required();

    auto* closure = app.add_subcommand("closure", "integral closure generators");
    closure->add_option("ideal", opt.name)->required();

    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    reg->add_option("ideal", opt.name)->required();
    reg->add_option("--betti-out", opt.betti_out, "write the Betti table CSV");

    auto* regtable = app.add_subcommand("regtable", "regularity defects over a grid");
    regtable->add_option("family", opt.name)->required();
    regtable->add_option("--grid", opt.grid_text)->required();
    regtable->add_flag("--saturated", opt.saturated, "also bound reg of saturations");
    regtable->add_flag("--closure", opt.closure, "also bound reg of integral closures");

    auto* decompose = app.add_subcommand("decompose", "irreducible decomposition");
    decompose->add_option("ideal", opt.name)->required();

    auto* check = app.add_subcommand("check", "run the property suites");
    check->add_option("--suite", opt.suite, "ideal|saturation|geometry|asymptotics|regularity|cli|all");

    std::vector<const char*> argv;
    argv.push_back("satrees");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    opt.max_degree_set = fit_deg->count() || fitray_deg->count() || bounds_deg->count();
    opt.start_set = fit_start->count() || fitray_start->count() || bounds_start->count();

    try {
        std::string command;
        for (CLI::App* sub :
             {saturate, table, fit, fitray, bounds, alpha, gens, newton, spread, closure, reg,
              regtable, decompose, check})
            if (sub->parsed()) command = sub->get_name();
        return dispatch(command, opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return (e.kind() == ErrKind::parse || e.kind() == ErrKind::usage) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace satrees
