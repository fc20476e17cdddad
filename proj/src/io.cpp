#include "nrb/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace nrb::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Parses a finite decimal number, consuming the whole view. An optional
// leading '+' is accepted.
bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

// Coefficient of i: "" or "+" -> 1, "-" -> -1, otherwise a number.
bool parse_imag_coefficient(std::string_view s, double& out) {
  if (s.empty() || s == "+") {
    out = 1;
    return true;
  }
  if (s == "-") {
    out = -1;
    return true;
  }
  return parse_real(s, out);
}

double entry_component(const json& v, std::size_t i, std::size_t j) {
  if (!v.is_number()) {
    throw ParseError("matrix document: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") has a non-numeric component");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError("matrix document: non-finite entry");
  return x;
}

}  // namespace

Matrix parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw ParseError("matrix document: expected an object with keys \"n\" and \"entries\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("matrix document: \"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("matrix document: \"entries\" must hold exactly n = " + std::to_string(n) + " rows");
  }
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("matrix document: row " + std::to_string(i) + " must hold exactly " + std::to_string(n) +
                       " entries (matrix must be square)");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("matrix document: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") must be a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {entry_component(e[0], i, j),
                                                                       entry_component(e[1], i, j)};
    }
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

std::string write_matrix_document(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("write_matrix_document: matrix must be square");
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = m.rows();
  doc["entries"] = std::move(rows);
  return doc.dump();
}

std::complex<double> parse_complex_literal(std::string_view token) {
  const std::string_view t = trim(token);
  auto fail = [&]() -> ParseError {
    return ParseError("malformed complex coefficient '" + std::string(t) + "'");
  };
  if (t.empty()) throw fail();

  if (t.back() != 'i') {
    double re = 0;
    if (!parse_real(t, re)) throw fail();
    return {re, 0.0};
  }

  const std::string_view body = t.substr(0, t.size() - 1);
  // Split "a+bi" at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0;
  double im = 0;
  if (split == std::string_view::npos) {
    if (!parse_imag_coefficient(body, im)) throw fail();
  } else {
    if (!parse_real(body.substr(0, split), re) || !parse_imag_coefficient(body.substr(split), im)) throw fail();
  }
  return {re, im};
}

MonicPolynomial<double> parse_coefficients(std::string_view text) {
  std::vector<std::complex<double>> desc;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    desc.push_back(parse_complex_literal(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (desc.front() != std::complex<double>(1.0)) {
    throw ParseError("leading coefficient must be 1 (monic polynomial), got '" +
                     std::string(trim(text.substr(0, text.find(',')))) + "'");
  }
  if (desc.size() < 3) {
    throw ParseError("polynomial degree must be at least 2, got " + std::to_string(desc.size() - 1));
  }
  return MonicPolynomial<double>::from_descending(desc);
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace nrb::io
