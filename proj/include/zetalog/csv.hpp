// CSV emission for scan series and reports. Reals carry 17 significant
// digits so every double round-trips; identical inputs produce
// byte-identical files.
#ifndef ZETALOG_CSV_HPP
#define ZETALOG_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "zetalog/logderiv.hpp"

namespace zetalog {

std::string format_real(double x);

// Header `x_axis,approx_re,approx_im,ref_re,ref_im,residual_abs,bound,ratio`
// then one row per report in order. The x column is the point for an
// a-scan and the cutoff for an N-scan.
void write_reports_csv(std::ostream& out, std::span<const ApproxReport> reports, ScanAxis axis);
void write_scan_csv(std::ostream& out, const ScanSeries& series);

} // namespace zetalog

#endif
