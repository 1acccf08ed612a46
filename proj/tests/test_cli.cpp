#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zetalog/cli.hpp"
#include "zetalog/csv.hpp"

using namespace zetalog;

namespace {

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"zetalog"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("format_real round-trips doubles") {
    for (double x : {0.1, -3.714285714285714e-11, 1.0 / 3.0, 1e17, 5.0}) {
        const std::string s = format_real(x);
        CHECK(std::stod(s) == x);
    }
}

TEST_CASE("emit_csv degenerate series") {
    ScanSeries empty;
    std::ostringstream out;
    write_scan_csv(out, empty);
    CHECK(out.str() == "x_axis,approx_re,approx_im,ref_re,ref_im,residual_abs,bound,ratio\n");

    ScanSeries single;
    single.axis = ScanAxis::grid_in_n;
    ApproxReport r;
    r.cutoff = 42;
    r.approximation = {1.5, -0.25};
    r.reference = {1.25, 0.0};
    r.residual_abs = 0.35355339059327379;
    r.bound = 0.5;
    r.ratio = r.residual_abs / r.bound;
    single.entries.push_back(r);
    std::ostringstream out2;
    write_scan_csv(out2, single);
    std::vector<std::string> lines;
    std::istringstream in(out2.str());
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "42,1.5,-0.25,1.25,0,0.35355339059327379,0.5,0.70710678118654757");
}

TEST_CASE("approx subcommand writes a single-row report") {
    TempFile tmp("cli_approx_out.csv");
    CHECK(run_cli({"approx", "--n", "1", "--a-re", "2", "--N", "10000", "--out",
                   tmp.path.c_str()}) == 0);
    const std::string body = slurp(tmp.path);
    std::istringstream in(body);
    std::string header, row, extra;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    CHECK(!std::getline(in, extra));
    CHECK(header == "x_axis,approx_re,approx_im,ref_re,ref_im,residual_abs,bound,ratio");
    CHECK(row.substr(0, 6) == "10000,");
    // residual column stays within the convergent-regime expectation
    std::vector<double> cols;
    std::istringstream fields(row);
    for (std::string c; std::getline(fields, c, ',');)
        cols.push_back(std::stod(c));
    REQUIRE(cols.size() == 8);
    CHECK(cols[5] <= 2e-3);
}

TEST_CASE("scan CSV round-trips to full precision") {
    TempFile tmp("cli_scan_out.csv");
    CHECK(run_cli({"scan-a", "--n", "1", "--N", "5000", "--grid", "0.6:0.9:4", "--out",
                   tmp.path.c_str()}) == 0);
    // re-parse and compare against a direct in-process evaluation
    const MangoldtTable table = build_mangoldt(5'000);
    const std::vector<double> grid{0.6, 0.7, 0.8, 0.9};
    const ScanSeries expected = scan_over_a(table, 1, grid, 5'000, BoundParameters{}, {});
    std::ifstream in(tmp.path);
    std::string line;
    REQUIRE(std::getline(in, line)); // header
    for (const ApproxReport& r : expected.entries) {
        REQUIRE(std::getline(in, line));
        std::vector<double> cols;
        std::istringstream fields(line);
        for (std::string c; std::getline(fields, c, ',');)
            cols.push_back(std::stod(c));
        REQUIRE(cols.size() == 8);
        CHECK(cols[0] == r.point.real());
        CHECK(cols[1] == r.approximation.real());
        CHECK(cols[2] == r.approximation.imag());
        CHECK(cols[3] == r.reference.real());
        CHECK(cols[5] == r.residual_abs);
        CHECK(cols[6] == r.bound);
        CHECK(cols[7] == r.ratio);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    TempFile a("cli_det_a.csv"), b("cli_det_b.csv");
    for (const char* path : {a.path.c_str(), b.path.c_str()})
        CHECK(run_cli({"scan-n", "--n", "1", "--a-re", "0.75", "--grid-log", "100:10000:5",
                       "--out", path}) == 0);
    const std::string first = slurp(a.path);
    CHECK(!first.empty());
    CHECK(first == slurp(b.path));
}

TEST_CASE("usage and domain errors exit 1") {
    CHECK(run_cli({"scan-a", "--n", "1", "--N", "1000"}) == 1);             // missing grid
    CHECK(run_cli({"scan-a", "--n", "1", "--N", "1000", "--grid", "x"}) == 1);
    CHECK(run_cli({"scan-a", "--n", "1", "--N", "1000", "--grid", "0.3:0.9:4"}) == 1);
    CHECK(run_cli({"approx", "--n", "1", "--a-re", "0.4", "--N", "1000"}) == 1);
    CHECK(run_cli({"oscillation", "--t", "0", "--N", "100"}) == 1);
    CHECK(run_cli({"li", "--n", "1", "--a-re", "0.5", "--N", "1000"}) == 1);
    CHECK(run_cli({"eta", "--n", "1"}) == 1);                                // missing N
    CHECK(run_cli({"nonsense"}) != 0);
}

TEST_CASE("numerical failure exits 2") {
    // Re(s+a) barely above 1: the Mellin integrand decays so slowly toward
    // 0 that the dyadic quadrature pieces never die out
    CHECK(run_cli({"identities", "--n", "2", "--a-re", "0.7", "--s-re", "0.3000001"}) == 2);
}

TEST_CASE("eta and identities emit well-formed CSV") {
    TempFile tmp("cli_eta_out.csv");
    CHECK(run_cli({"eta", "--n", "1", "--N", "10000", "--out", tmp.path.c_str()}) == 0);
    const std::string body = slurp(tmp.path);
    CHECK(body.substr(0, 10) == "n,N,value\n");

    TempFile tmp2("cli_identities_out.csv");
    CHECK(run_cli({"identities", "--n", "2", "--a-re", "0.7", "--out", tmp2.path.c_str()}) == 0);
    std::istringstream in(slurp(tmp2.path));
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "check,x,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        const double diff = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(diff <= 1e-8);
    }
    CHECK(rows == 10);
}
