#include "zetalog/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "zetalog/arithmetic.hpp"
#include "zetalog/csv.hpp"
#include "zetalog/li.hpp"
#include "zetalog/logderiv.hpp"
#include "zetalog/special.hpp"

namespace zetalog::cli {

namespace {

struct RunConfig {
    int order = 1;
    double a_re = 0.0;
    double a_im = 0.0;
    std::uint64_t n_cut = 1'000'000;
    std::uint64_t n_max = 1'000'000;
    BoundParameters bounds;
    std::string grid;
    std::string grid_log;
    std::string out_path;
    double t = 1.0;
    double s_re = 2.0;
    double s_im = 0.0;
    PrecisionConfig precision;

    Complex a() const { return {a_re, a_im}; }
    Complex s() const { return {s_re, s_im}; }
};

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
};

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec g;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.points, &trailing) != 3)
        throw std::invalid_argument("grid: expected start:stop:points, got '" + text + "'");
    if (g.points < 1)
        throw std::invalid_argument("grid: points must be at least 1");
    if (g.points > 1 && !(g.stop > g.start))
        throw std::invalid_argument("grid: stop must exceed start for multi-point grids");
    return g;
}

std::vector<double> linear_grid(const GridSpec& g) {
    std::vector<double> xs(g.points);
    if (g.points == 1) {
        xs[0] = g.start;
        return xs;
    }
    const double step = (g.stop - g.start) / static_cast<double>(g.points - 1);
    for (int i = 0; i < g.points; ++i)
        xs[i] = g.start + step * static_cast<double>(i);
    xs.back() = g.stop;
    return xs;
}

// Integer cutoffs, linear or logarithmic, deduplicated after rounding.
std::vector<std::uint64_t> cutoff_grid(const GridSpec& g, bool log_spaced) {
    if (!(g.start >= 1.0))
        throw std::invalid_argument("grid: cutoffs must be at least 1");
    std::vector<std::uint64_t> ns;
    ns.reserve(g.points);
    for (int i = 0; i < g.points; ++i) {
        double v;
        if (g.points == 1) {
            v = g.start;
        } else if (log_spaced) {
            const double f = static_cast<double>(i) / static_cast<double>(g.points - 1);
            v = std::exp(std::log(g.start) + f * (std::log(g.stop) - std::log(g.start)));
        } else {
            const double f = static_cast<double>(i) / static_cast<double>(g.points - 1);
            v = g.start + f * (g.stop - g.start);
        }
        const auto n = static_cast<std::uint64_t>(std::llround(v));
        if (ns.empty() || n > ns.back())
            ns.push_back(n);
    }
    return ns;
}

class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty())
            return;
        file_.open(path);
        if (!file_)
            throw std::invalid_argument("cannot open output path '" + path + "'");
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_complex_pair_row(std::ostream& out, const std::string& check, double x, Complex lhs,
                            Complex rhs) {
    out << check << ',' << format_real(x) << ',' << format_real(lhs.real()) << ','
        << format_real(lhs.imag()) << ',' << format_real(rhs.real()) << ','
        << format_real(rhs.imag()) << ',' << format_real(std::abs(lhs - rhs)) << '\n';
}

void run_mangoldt(const RunConfig& c, std::ostream& out) {
    const MangoldtTable table = build_mangoldt(c.n_max);
    out << "m,lambda\n";
    for (std::uint64_t m = 1; m <= table.limit(); ++m)
        out << m << ',' << format_real(table[m]) << '\n';
    std::cerr << "mangoldt: wrote " << table.limit() << " rows\n";
}

void run_approx(const RunConfig& c, std::ostream& out) {
    c.bounds.validate();
    validate_approximation_point(c.a());
    const MangoldtTable table = build_mangoldt(c.n_cut);
    const ApproxReport report =
        residual_report(table, c.order, c.a(), c.n_cut, c.bounds, c.precision);
    write_reports_csv(out, {&report, 1}, ScanAxis::grid_in_n);
    std::cerr << "approx: n=" << c.order << " residual=" << format_real(report.residual_abs)
              << " ratio=" << format_real(report.ratio) << '\n';
}

void run_scan_a(const RunConfig& c, std::ostream& out) {
    if (c.grid.empty())
        throw std::invalid_argument("scan-a: --grid start:stop:points is required");
    c.bounds.validate();
    const std::vector<double> grid = linear_grid(parse_grid_spec(c.grid));
    for (double x : grid)
        if (x <= 0.5 || x == 1.0)
            throw std::domain_error("scan-a: grid must stay inside the validity domain "
                                    "(a > 1/2, a != 1)");
    const MangoldtTable table = build_mangoldt(c.n_cut);
    const ScanSeries series = scan_over_a(table, c.order, grid, c.n_cut, c.bounds, c.precision);
    write_scan_csv(out, series);
    std::cerr << "scan-a: " << series.entries.size() << " points, n=" << c.order
              << ", N=" << c.n_cut << '\n';
}

void run_scan_n(const RunConfig& c, std::ostream& out) {
    if (c.grid.empty() == c.grid_log.empty())
        throw std::invalid_argument("scan-n: exactly one of --grid or --grid-log is required");
    c.bounds.validate();
    validate_approximation_point(c.a());
    const bool log_spaced = !c.grid_log.empty();
    const std::vector<std::uint64_t> cutoffs =
        cutoff_grid(parse_grid_spec(log_spaced ? c.grid_log : c.grid), log_spaced);
    const MangoldtTable table = build_mangoldt(cutoffs.empty() ? 1 : cutoffs.back());
    const ScanSeries series =
        scan_over_n_cut(table, c.order, c.a(), cutoffs, c.bounds, c.precision);
    write_scan_csv(out, series);
    std::cerr << "scan-n: " << series.entries.size() << " cutoffs, n=" << c.order
              << ", a=" << format_real(c.a_re) << '\n';
}

void run_li(const RunConfig& c, std::ostream& out) {
    const LiParameters params{c.order, c.a(), c.n_cut};
    params.validate();
    const MangoldtTable table = build_mangoldt(c.n_cut);
    const Complex arith = li_sum_arithmetic_side(table, c.order, c.a(), c.n_cut, c.precision);
    const Complex deriv = li_sum_derivative_side(c.order, c.a(), c.precision);
    out << "n,a_re,a_im,N,arith_re,arith_im,deriv_re,deriv_im,abs_diff\n";
    out << c.order << ',' << format_real(c.a_re) << ',' << format_real(c.a_im) << ',' << c.n_cut
        << ',' << format_real(arith.real()) << ',' << format_real(arith.imag()) << ','
        << format_real(deriv.real()) << ',' << format_real(deriv.imag()) << ','
        << format_real(std::abs(arith - deriv)) << '\n';
    std::cerr << "li: n=" << c.order << " |arith-deriv|=" << format_real(std::abs(arith - deriv))
              << '\n';
}

void run_identities(const RunConfig& c, std::ostream& out) {
    const Complex a = c.a();
    const int n = c.order;
    out << "check,x,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff\n";

    const MellinCheck mc = mellin_consistency(n, a, c.s(), c.precision);
    write_complex_pair_row(out, "mellin_kernel_vs_quadrature", c.s_re, mc.kernel, mc.quadrature);

    const Complex amp = 2.0 * a - 1.0;
    for (double x : {0.1, 0.5, 0.9}) {
        const double lx = std::log(x);
        const Complex lag_p = std::exp((a - 1.0) * lx) * amp * laguerre_assoc1(n - 1, -amp * lx);
        const Complex lag_pt = std::exp(-a * lx) * amp * laguerre_assoc1(n - 1, amp * lx);
        write_complex_pair_row(out, "p_vs_laguerre", x, p_polynomial(n, a, x), lag_p);
        write_complex_pair_row(out, "p_tilde_vs_laguerre", x, p_tilde(n, a, x), lag_pt);
    }
    write_complex_pair_row(out, "p_tilde_reflection", 2.0, p_tilde(n, a, 2.0),
                           p_polynomial(n, a, 0.5) / 2.0);

    write_complex_pair_row(out, "gamma_term_oracle_vs_closed", 0.0,
                           gamma_term_value(n, a, c.precision),
                           gamma_term_closed_form(n, a, c.precision));
    write_complex_pair_row(out, "pole_term_closed_vs_oracle", 0.0, pole_term_value(n, a),
                           pole_term_oracle(n, a, c.precision));
    std::cerr << "identities: n=" << n << " a=" << format_real(c.a_re) << '\n';
}

void run_eta(const RunConfig& c, std::ostream& out) {
    const MangoldtTable table = build_mangoldt(c.n_cut);
    const double value = eta_coefficient(table, c.order, c.n_cut);
    out << "n,N,value\n";
    out << c.order << ',' << c.n_cut << ',' << format_real(value) << '\n';
    std::cerr << "eta: n=" << c.order << " value=" << format_real(value) << '\n';
}

void run_oscillation(const RunConfig& c, std::ostream& out) {
    std::vector<std::uint64_t> cutoffs;
    if (!c.grid_log.empty())
        cutoffs = cutoff_grid(parse_grid_spec(c.grid_log), true);
    else if (!c.grid.empty())
        cutoffs = cutoff_grid(parse_grid_spec(c.grid), false);
    else
        cutoffs = {c.n_cut};
    if (c.t == 0.0)
        throw std::domain_error("oscillation: t must be nonzero");
    const MangoldtTable table = build_mangoldt(cutoffs.back());
    out << "N,value_re,value_im,magnitude\n";
    for (std::uint64_t n_cut : cutoffs) {
        const Complex v = line_one_oscillation(table, c.t, n_cut, c.precision);
        out << n_cut << ',' << format_real(v.real()) << ',' << format_real(v.imag()) << ','
            << format_real(std::abs(v)) << '\n';
    }
    std::cerr << "oscillation: t=" << format_real(c.t) << ", " << cutoffs.size() << " cutoffs\n";
}

void add_precision_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--em-cutoff", c.precision.em_cutoff,
                    "Euler-Maclaurin baseline main-sum length");
    cmd->add_option("--bernoulli-order", c.precision.bernoulli_order,
                    "number of B_2k correction terms (1..15)");
    cmd->add_option("--cauchy-points", c.precision.cauchy_points,
                    "trapezoid nodes on the Cauchy circle");
    cmd->add_option("--cauchy-radius", c.precision.cauchy_radius, "Cauchy circle radius");
    cmd->add_option("--quad-tol", c.precision.quad_rel_tol, "quadrature relative tolerance");
    cmd->add_option("-o,--out", c.out_path, "output CSV path (default: stdout)");
}

void add_bound_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--delta", c.bounds.delta, "zero-free strip width Delta");
    cmd->add_option("--delta0", c.bounds.delta0, "domain margin delta0");
    cmd->add_option("--constant-c", c.bounds.constant_c, "bound multiplier C");
}

} // namespace

int run(int argc, const char* const* argv) {
    RunConfig c;
    CLI::App app{"truncated von Mangoldt approximations of the derivatives of ln zeta, "
                 "with identity cross-checks"};
    app.require_subcommand(1);

    CLI::App* mangoldt = app.add_subcommand("mangoldt", "dump the von Mangoldt table as CSV");
    mangoldt->add_option("--nmax", c.n_max, "table limit")->required();
    mangoldt->add_option("-o,--out", c.out_path, "output CSV path (default: stdout)");

    CLI::App* approx = app.add_subcommand("approx", "single approximation report");
    approx->add_option("--n", c.order, "derivative order");
    approx->add_option("--a-re,--a", c.a_re, "Re a")->required();
    approx->add_option("--a-im", c.a_im, "Im a");
    approx->add_option("--N", c.n_cut, "truncation cutoff")->required();
    add_bound_options(approx, c);
    add_precision_options(approx, c);

    CLI::App* scan_a = app.add_subcommand("scan-a", "residual scan over a grid in a");
    scan_a->add_option("--n", c.order, "derivative order");
    scan_a->add_option("--N", c.n_cut, "truncation cutoff")->required();
    scan_a->add_option("--grid", c.grid, "a grid start:stop:points")->required();
    add_bound_options(scan_a, c);
    add_precision_options(scan_a, c);

    CLI::App* scan_n = app.add_subcommand("scan-n", "residual scan over cutoffs N");
    scan_n->add_option("--n", c.order, "derivative order");
    scan_n->add_option("--a-re,--a", c.a_re, "Re a")->required();
    scan_n->add_option("--a-im", c.a_im, "Im a");
    scan_n->add_option("--grid", c.grid, "linear N grid start:stop:points");
    scan_n->add_option("--grid-log", c.grid_log, "logarithmic N grid start:stop:points");
    add_bound_options(scan_n, c);
    add_precision_options(scan_n, c);

    CLI::App* li = app.add_subcommand("li", "Li sum, arithmetic vs derivative side");
    li->add_option("--n", c.order, "Li index");
    li->add_option("--a-re,--a", c.a_re, "Re a")->required();
    li->add_option("--a-im", c.a_im, "Im a");
    li->add_option("--N", c.n_cut, "arithmetic-side truncation");
    add_precision_options(li, c);

    CLI::App* identities = app.add_subcommand("identities", "kernel/polynomial/derivative-term "
                                                            "identity checks");
    identities->add_option("--n", c.order, "index");
    identities->add_option("--a-re,--a", c.a_re, "Re a")->required();
    identities->add_option("--a-im", c.a_im, "Im a");
    identities->add_option("--s-re", c.s_re, "Re s for the Mellin check");
    identities->add_option("--s-im", c.s_im, "Im s for the Mellin check");
    add_precision_options(identities, c);

    CLI::App* eta = app.add_subcommand("eta", "eta-type coefficient at s = 1");
    eta->add_option("--n", c.order, "order");
    eta->add_option("--N", c.n_cut, "truncation cutoff")->required();
    eta->add_option("-o,--out", c.out_path, "output CSV path (default: stdout)");

    CLI::App* oscillation = app.add_subcommand("oscillation", "Re s = 1 oscillation combination");
    oscillation->add_option("--t", c.t, "imaginary height t")->required();
    oscillation->add_option("--N", c.n_cut, "single cutoff");
    oscillation->add_option("--grid", c.grid, "linear N grid start:stop:points");
    oscillation->add_option("--grid-log", c.grid_log, "logarithmic N grid start:stop:points");
    add_precision_options(oscillation, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's assorted parse-error codes onto the usage code
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        c.precision.validate();
        OutputTarget target(c.out_path);
        std::ostream& out = target.stream();
        if (mangoldt->parsed())
            run_mangoldt(c, out);
        else if (approx->parsed())
            run_approx(c, out);
        else if (scan_a->parsed())
            run_scan_a(c, out);
        else if (scan_n->parsed())
            run_scan_n(c, out);
        else if (li->parsed())
            run_li(c, out);
        else if (identities->parsed())
            run_identities(c, out);
        else if (eta->parsed())
            run_eta(c, out);
        else if (oscillation->parsed())
            run_oscillation(c, out);
        out.flush();
        if (!out)
            throw std::invalid_argument("writing output failed");
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace zetalog::cli
