#include "nrb/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "nrb/io.hpp"

namespace nrb::report {

namespace {

using io::format_number;

std::string human(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::string params_text(const std::optional<BoundParams<double>>& p) {
  if (!p) return "";
  std::ostringstream os;
  os << "r=" << human(p->r);
  if (p->alpha) os << " alpha=" << human(*p->alpha);
  if (p->lambda) os << " lambda=" << human(*p->lambda);
  if (p->variant) os << " variant=" << to_string(*p->variant);
  return os.str();
}

std::string params_json(const std::optional<BoundParams<double>>& p) {
  if (!p) return "null";
  std::ostringstream os;
  os << "{\"r\":" << format_number(p->r);
  if (p->alpha) os << ",\"alpha\":" << format_number(*p->alpha);
  if (p->lambda) os << ",\"lambda\":" << format_number(*p->lambda);
  if (p->variant) os << ",\"variant\":" << json_string(to_string(*p->variant));
  os << "}";
  return os.str();
}

// Left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

std::string markdown(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "|";
    for (const auto& cell : rows[r]) os << " " << cell << " |";
    os << "\n";
    if (r == 0) {
      os << "|";
      for (std::size_t k = 0; k < rows[r].size(); ++k) os << " --- |";
      os << "\n";
    }
  }
  return os.str();
}

std::string complex_text(const std::complex<double>& z, bool machine) {
  const auto num = [&](double x) { return machine ? format_number(x) : human(x); };
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return num(z.real()) + (std::signbit(im) ? "-" : "+") + num(std::abs(im)) + "i";
}

}  // namespace

std::string render_radius(const RadiusRecord& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << "{\"w\":" << format_number(r.w) << ",\"c\":" << format_number(r.c) << ",\"norm\":" << format_number(r.norm)
         << ",\"theta_star\":" << format_number(r.theta_star) << "}\n";
      return os.str();
    case Format::csv:
      os << "w,c,norm,theta_star\n"
         << format_number(r.w) << "," << format_number(r.c) << "," << format_number(r.norm) << ","
         << format_number(r.theta_star) << "\n";
      return os.str();
    case Format::markdown:
      return markdown({{"quantity", "value"},
                       {"w", format_number(r.w)},
                       {"c", format_number(r.c)},
                       {"norm", format_number(r.norm)},
                       {"theta_star", format_number(r.theta_star)}});
    case Format::table:
      break;
  }
  return aligned({{"w", human(r.w)}, {"c", human(r.c)}, {"norm", human(r.norm)}, {"theta_star", human(r.theta_star)}});
}

std::string render_bounds(const BoundReport<double>& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      os << "{\"computed_radius\":" << format_number(report.computed_radius) << ",\"entries\":[";
      for (std::size_t k = 0; k < report.entries.size(); ++k) {
        const auto& e = report.entries[k];
        if (k) os << ",";
        os << "{\"name\":" << json_string(e.name) << ",\"value\":" << format_number(e.value)
           << ",\"slack\":" << format_number(e.slack) << ",\"params\":" << params_json(e.params)
           << ",\"formula\":" << json_string(e.formula) << "}";
      }
      os << "]}\n";
      return os.str();
    }
    case Format::csv: {
      os << "name,value,slack,r,alpha,lambda,variant\n";
      for (const auto& e : report.entries) {
        os << e.name << "," << format_number(e.value) << "," << format_number(e.slack) << ",";
        if (e.params) {
          os << format_number(e.params->r) << "," << (e.params->alpha ? format_number(*e.params->alpha) : "") << ","
             << (e.params->lambda ? format_number(*e.params->lambda) : "") << ","
             << (e.params->variant ? to_string(*e.params->variant) : "");
        } else {
          os << ",,,";
        }
        os << "\n";
      }
      os << "computed_radius," << format_number(report.computed_radius) << ",0,,,,\n";
      return os.str();
    }
    case Format::markdown: {
      std::vector<std::vector<std::string>> rows{{"bound", "value", "slack", "parameters"}};
      for (const auto& e : report.entries)
        rows.push_back({e.name, format_number(e.value), format_number(e.slack), params_text(e.params)});
      os << markdown(rows) << "\ncomputed w(T) = " << format_number(report.computed_radius) << "\n";
      return os.str();
    }
    case Format::table:
      break;
  }
  std::vector<std::vector<std::string>> rows{{"bound", "value", "slack", "parameters", "formula"}};
  for (const auto& e : report.entries)
    rows.push_back({e.name, human(e.value), human(e.slack), params_text(e.params), e.formula});
  os << aligned(rows) << "\ncomputed w(T) = " << human(report.computed_radius) << "\n";
  return os.str();
}

std::string render_zero_table(const ZeroBoundTable<double>& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      os << "{\"bounds\":[";
      for (std::size_t k = 0; k < table.entries.size(); ++k) {
        if (k) os << ",";
        os << "{\"method\":" << json_string(table.entries[k].method)
           << ",\"bound\":" << format_number(table.entries[k].bound) << "}";
      }
      os << "],\"max_root_modulus\":" << format_number(table.max_root_modulus) << ",\"roots\":[";
      for (std::size_t k = 0; k < table.roots.size(); ++k) {
        if (k) os << ",";
        os << "[" << format_number(table.roots[k].real()) << "," << format_number(table.roots[k].imag()) << "]";
      }
      os << "]}\n";
      return os.str();
    }
    case Format::csv: {
      os << "kind,name,value,im\n";
      for (const auto& e : table.entries) os << "bound," << e.method << "," << format_number(e.bound) << ",\n";
      os << "max_root_modulus,," << format_number(table.max_root_modulus) << ",\n";
      for (std::size_t k = 0; k < table.roots.size(); ++k) {
        os << "root," << k << "," << format_number(table.roots[k].real()) << ","
           << format_number(table.roots[k].imag()) << "\n";
      }
      return os.str();
    }
    case Format::markdown: {
      std::vector<std::vector<std::string>> rows{{"method", "bound"}};
      for (const auto& e : table.entries) rows.push_back({e.method, format_number(e.bound)});
      os << markdown(rows) << "\nmax |root| = " << format_number(table.max_root_modulus) << "\n\n";
      std::vector<std::vector<std::string>> roots{{"root", "modulus"}};
      for (const auto& z : table.roots) roots.push_back({complex_text(z, true), format_number(std::abs(z))});
      os << markdown(roots);
      return os.str();
    }
    case Format::table:
      break;
  }
  std::vector<std::vector<std::string>> rows{{"method", "bound"}};
  for (const auto& e : table.entries) rows.push_back({e.method, human(e.bound)});
  os << aligned(rows) << "\nmax |root| = " << human(table.max_root_modulus) << "\nroots:\n";
  for (const auto& z : table.roots) os << "  " << complex_text(z, false) << "  (|z| = " << human(std::abs(z)) << ")\n";
  return os.str();
}

std::string render_range_csv(const std::vector<std::complex<double>>& points) {
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& z : points) os << format_number(z.real()) << "," << format_number(z.imag()) << "\n";
  return os.str();
}

}  // namespace nrb::report
