#include "zetalog/csv.hpp"

#include <cstdio>
#include <ostream>

namespace zetalog {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_reports_csv(std::ostream& out, std::span<const ApproxReport> reports, ScanAxis axis) {
    out << "x_axis,approx_re,approx_im,ref_re,ref_im,residual_abs,bound,ratio\n";
    for (const ApproxReport& r : reports) {
        const double x = (axis == ScanAxis::grid_in_a) ? r.point.real()
                                                       : static_cast<double>(r.cutoff);
        out << format_real(x) << ',' << format_real(r.approximation.real()) << ','
            << format_real(r.approximation.imag()) << ',' << format_real(r.reference.real())
            << ',' << format_real(r.reference.imag()) << ',' << format_real(r.residual_abs)
            << ',' << format_real(r.bound) << ',' << format_real(r.ratio) << '\n';
    }
}

void write_scan_csv(std::ostream& out, const ScanSeries& series) {
    write_reports_csv(out, series.entries, series.axis);
}

} // namespace zetalog
