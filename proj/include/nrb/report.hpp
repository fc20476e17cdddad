#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nrb/bounds.hpp"
#include "nrb/polyzero.hpp"

namespace nrb::report {

enum class Format { table, json, csv, markdown };

struct RadiusRecord {
  double w = 0;
  double c = 0;
  double norm = 0;
  double theta_star = 0;
};

std::string render_radius(const RadiusRecord& record, Format format);
std::string render_bounds(const BoundReport<double>& report, Format format);
std::string render_zero_table(const ZeroBoundTable<double>& table, Format format);
std::string render_range_csv(const std::vector<std::complex<double>>& points);

}  // namespace nrb::report
