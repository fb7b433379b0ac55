#include "fixsing/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixsing/cauchy.hpp"
#include "fixsing/common.hpp"
#include "fixsing/complete.hpp"
#include "fixsing/kernels.hpp"
#include "fixsing/spectral.hpp"
#include "fixsing/verify.hpp"

namespace fixsing::cli {
namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    double beta = 0.5;
    double lambda = 0.5;
    double nu1 = 0.3;
    double nu2 = 0.3;
    std::string load = "uniform";
    double amplitude = 1.0;
    int N = 17;
    int t1 = 200;
    int t2 = 210;
    int m0 = 20;
    int terms = 1000;
    int grid = 20;
    double lambda_min = 1e-4;
    double lambda_max = 1e4;
    std::string suite = "all";
    int nodes = 512;
    std::string out;
    std::string format = "csv";
};

json echo(const RunConfig& c)
{
    return json{{"command", c.command}, {"beta", c.beta},   {"lambda", c.lambda}, {"nu1", c.nu1},
                {"nu2", c.nu2},         {"load", c.load},   {"amplitude", c.amplitude},
                {"N", c.N},             {"t1", c.t1},       {"t2", c.t2},         {"m0", c.m0},
                {"terms", c.terms},     {"grid", c.grid},   {"lambda_min", c.lambda_min},
                {"lambda_max", c.lambda_max},               {"suite", c.suite},   {"nodes", c.nodes},
                {"format", c.format}};
}

struct Table {
    json config;
    std::vector<std::string> columns;
    json rows = json::array();
    json diagnostics = json::object();
};

// F(x) = A x^(k+1)/(k+1): the integrated load for a load growing like x^k.
int load_power(const std::string& load)
{
    if (load == "uniform") return 0;
    if (load == "linear") return 1;
    return 2;
}

RealFn load_fn(const RunConfig& c)
{
    const int k = load_power(c.load);
    const double a = c.amplitude / (k + 1.0);
    return [a, k](double x) { return a * std::pow(x, k + 1); };
}

std::vector<double> grid_points(int n)
{
    std::vector<double> x(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) x[static_cast<std::size_t>(k)] = static_cast<double>(k) / n;
    return x;
}

void validate(const RunConfig& c)
{
    auto need = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(what);
    };
    for (double v : {c.beta, c.lambda, c.nu1, c.nu2, c.amplitude, c.lambda_min, c.lambda_max})
        need(std::isfinite(v), "numeric parameters must be finite");
    need(c.grid >= 1, "grid must be at least 1");
    need(c.N >= 2, "N must be at least 2");
    need(c.t1 >= 1 && c.t2 >= 1, "t1 and t2 must be positive");
    need(c.nodes >= 16, "nodes must be at least 16");
    need(c.m0 >= 0, "m0 must be nonnegative");

    if (c.command == "characteristic") {
        need(std::abs(c.beta) < 1.0 && c.beta != 0.0, "characteristic needs 0 < |beta| < 1");
        need(c.terms > c.m0 + 1, "terms must exceed m0 + 1");
    }
    if (c.command == "antiplane" || c.command == "plane-strain") {
        need(c.lambda > 0.0, "lambda must be positive");
        need(c.t1 > c.N, "t1 must exceed N");
    }
    if (c.command == "plane-strain" || c.command == "gamma0") {
        need(c.nu1 > 0.0 && c.nu1 <= 0.5 && c.nu2 > 0.0 && c.nu2 <= 0.5, "Poisson ratios must lie in (0, 1/2]");
    }
    if (c.command == "gamma0") {
        need(c.lambda_min > 0.0 && c.lambda_max >= c.lambda_min, "need 0 < lambda_min <= lambda_max");
    }
}

void profile_rows(Table& t, const std::function<double(double)>& phi, int grid)
{
    t.columns = {"x", "phi"};
    for (double x : grid_points(grid)) t.rows.push_back(json::array({x, phi(x)}));
}

void add_report(Table& t, const std::map<std::string, double>& report)
{
    for (const auto& [k, v] : report) t.diagnostics[k] = v;
}

Table cmd_characteristic(const RunConfig& c)
{
    Table t;
    const int k = load_power(c.load);
    auto f = monomial_cosine_coeffs(k + 1, c.terms);
    for (double& v : f) v *= c.amplitude / (k + 1.0);
    auto basis = build_basis(c.beta, c.m0);
    const auto sol = characteristic_series_solve(basis, f, c.m0);
    profile_rows(t, [&](double x) { return sol.evaluate(x); }, c.grid);
    t.diagnostics["rho1"] = basis->rho1();
    t.diagnostics["C"] = sol.constant_C;
    return t;
}

Table solve_cauchy_route(const KernelSpec& kernel, const RunConfig& c, Table t)
{
    const auto sol = cauchy_solve(cauchy_regular_part(kernel), load_fn(c), c.N, c.t1, c.t2);
    profile_rows(t, [&](double x) { return sol.evaluate(x); }, c.grid);
    t.diagnostics["solver"] = "cauchy";
    t.diagnostics["C"] = sol.constant_C;
    add_report(t, sol.residual_report);
    return t;
}

Table solve_spectral_route(const KernelSpec& kernel, const RunConfig& c, Table t)
{
    SolveConfig cfg;
    cfg.N = c.N;
    cfg.t1 = c.t1;
    cfg.t2 = c.t2;
    cfg.pv_nodes = c.nodes;
    const auto sol = solve(kernel, load_fn(c), cfg);
    profile_rows(t, [&](double x) { return sol.evaluate(x); }, c.grid);
    t.diagnostics["solver"] = "spectral";
    t.diagnostics["C"] = sol.constant_C;
    add_report(t, sol.residual_report);
    return t;
}

Table cmd_antiplane(const RunConfig& c)
{
    const auto params = antiplane_params(c.lambda);
    Table t;
    t.diagnostics["beta"] = params.beta;
    const auto kernel = antiplane_kernel(params);
    return params.beta == 0.0 ? solve_cauchy_route(kernel, c, std::move(t)) : solve_spectral_route(kernel, c, std::move(t));
}

// Below this |beta_eff| the problem is treated as the pure Cauchy case; the
// root finder leaves ~1e-16 where the exact value is 0.
constexpr double beta_snap = 1e-12;

Table cmd_plane_strain(const RunConfig& c)
{
    auto params = plane_strain_coeffs(c.lambda, 1.0, c.nu1, c.nu2);
    gamma0_root(params);
    Table t;
    const bool snapped = std::abs(params.beta_eff) < beta_snap;
    if (snapped) params.beta_eff = 0.0;
    t.diagnostics["gamma0"] = params.gamma0;
    t.diagnostics["beta_eff"] = params.beta_eff;
    t.diagnostics["b1"] = params.b1;
    t.diagnostics["b2"] = params.b2;
    t.diagnostics["b3"] = params.b3;
    t.diagnostics["sign_changes"] = params.sign_changes;
    const auto kernel = plane_strain_kernel(params);
    return snapped ? solve_cauchy_route(kernel, c, std::move(t)) : solve_spectral_route(kernel, c, std::move(t));
}

Table cmd_gamma0(const RunConfig& c)
{
    Table t;
    t.columns = {"lambda", "gamma0", "beta_eff"};
    const double lo = std::log(c.lambda_min), hi = std::log(c.lambda_max);
    for (int k = 0; k <= c.grid; ++k) {
        const double lambda = k == 0        ? c.lambda_min
                              : k == c.grid ? c.lambda_max
                                            : std::exp(lo + (hi - lo) * k / c.grid);
        auto params = plane_strain_coeffs(lambda, 1.0, c.nu1, c.nu2);
        gamma0_root(params);
        t.rows.push_back(json::array({lambda, params.gamma0, params.beta_eff}));
    }
    return t;
}

Table cmd_verify(const RunConfig& c, bool& all_pass)
{
    Table t;
    t.columns = {"suite", "check", "residual", "tolerance", "pass"};
    int failed = 0;
    for (const auto& chk : run_checks(c.suite, c.nodes)) {
        t.rows.push_back(json::array({chk.suite, chk.name, chk.value, chk.tolerance, chk.pass()}));
        if (!chk.pass()) ++failed;
    }
    t.diagnostics["checks"] = t.rows.size();
    t.diagnostics["failed"] = failed;
    all_pass = failed == 0;
    return t;
}

std::string number(double v)
{
    std::array<char, 32> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), r.ptr};
}

std::string cell(const json& v)
{
    if (v.is_number_float()) return number(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

void write_csv(const Table& t, std::ostream& os)
{
    for (const auto& [k, v] : t.config.items()) os << "# " << k << '=' << cell(v) << '\n';
    for (const auto& [k, v] : t.diagnostics.items()) os << "# diag " << k << '=' << cell(v) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os)
{
    json doc{{"config", t.config}, {"columns", t.columns}, {"rows", t.rows}, {"diagnostics", t.diagnostics}};
    os << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Singular integral equations with a fixed singularity on [0,1]", "fixsing"};
    app.set_config("--config", "", "flat key=value file; flags given on the command line win");
    app.add_option("command", c.command, "characteristic | antiplane | plane-strain | gamma0 | verify")
        ->required()
        ->check(CLI::IsMember({"characteristic", "antiplane", "plane-strain", "gamma0", "verify"}));
    app.add_option("--beta", c.beta, "coefficient of the fixed singularity")->capture_default_str();
    app.add_option("--lambda", c.lambda, "shear modulus ratio G1/G2")->capture_default_str();
    app.add_option("--nu1", c.nu1, "Poisson ratio, material 1")->capture_default_str();
    app.add_option("--nu2", c.nu2, "Poisson ratio, material 2")->capture_default_str();
    app.add_option("--load", c.load, "right-hand side P x, x^2/2 or x^3/3")
        ->check(CLI::IsMember({"uniform", "linear", "quadratic"}))
        ->capture_default_str();
    app.add_option("--amplitude", c.amplitude, "load amplitude P")->capture_default_str();
    app.add_option("--N", c.N, "system order")->capture_default_str();
    app.add_option("--t1", c.t1, "collocation points in x")->capture_default_str();
    app.add_option("--t2", c.t2, "quadrature points in xi")->capture_default_str();
    app.add_option("--m0", c.m0, "series truncation (characteristic)")->capture_default_str();
    app.add_option("--terms", c.terms, "cosine terms in the series for C (characteristic)")->capture_default_str();
    app.add_option("--grid", c.grid, "output points x_k = k/grid, or lambda steps for gamma0")->capture_default_str();
    app.add_option("--lambda-min", c.lambda_min, "gamma0 sweep start")->capture_default_str();
    app.add_option("--lambda-max", c.lambda_max, "gamma0 sweep end")->capture_default_str();
    app.add_option("--suite", c.suite, "verify suite or all")->capture_default_str();
    app.add_option("--nodes", c.nodes, "principal-value rule size for residual checks")->capture_default_str();
    app.add_option("--out", c.out, "output file (default stdout)");
    app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    }

    std::vector<std::string> warnings;
    set_warning_sink([&](std::string_view m) {
        warnings.emplace_back(m);
        err << "warning: " << m << '\n';
    });
    struct Restore {
        ~Restore() { set_warning_sink(nullptr); }
    } restore;

    Table t;
    bool all_pass = true;
    try {
        validate(c);
        if (c.command == "characteristic") t = cmd_characteristic(c);
        else if (c.command == "antiplane") t = cmd_antiplane(c);
        else if (c.command == "plane-strain") t = cmd_plane_strain(c);
        else if (c.command == "gamma0") t = cmd_gamma0(c);
        else t = cmd_verify(c, all_pass);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return numerical_failure;
    }
    t.config = echo(c);
    if (!warnings.empty()) t.diagnostics["warnings"] = warnings;

    std::ofstream file;
    if (!c.out.empty() && c.out != "-") {
        file.open(c.out);
        if (!file) {
            err << "error: cannot open " << c.out << '\n';
            return config_error;
        }
    }
    std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : out;
    os.imbue(std::locale::classic());
    if (c.format == "json") write_json(t, os);
    else write_csv(t, os);
    return all_pass ? ok : verify_failed;
}

}  // namespace fixsing::cli
