// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nrb/nrb.hpp"
#include "nrb/verify.hpp"
#include "oracles.hpp"

using namespace nrb;
using oracle::cd;
using oracle::Mat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string near(const char* label, double got, double want, double tol) {
  return std::string(label) + " = " + num(got) + ", expected " + num(want) + " +/- " + num(tol);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto opt = alpha_min_norm(oracle::diag({0, 1, 4}), oracle::diag({1, 4, 0}));
  out.require(std::abs(opt.value - 16.0 / 7) <= 1e-9, near("min norm", opt.value, 16.0 / 7, 1e-9));
  out.require(std::abs(opt.alpha_star - 4.0 / 7) <= 1e-6, near("alpha*", opt.alpha_star, 4.0 / 7, 1e-6));
  const double k = bound_kittaneh_sq(oracle::example_t());
  out.require(std::abs(k * k - 2.5) <= 1e-10, near("kittaneh_sq^2", k * k, 2.5, 1e-10));
  const double elapsed = seconds_since(start);
  out.require(elapsed < 1.0, "runtime " + num(elapsed) + " s >= 1 s");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto opt = alpha_min_norm(oracle::diag({0, 4, 9, 1}), oracle::diag({4, 9, 0, 1}));
  out.require(std::abs(opt.value - 81.0 / 14) <= 1e-9, near("min norm", opt.value, 81.0 / 14, 1e-9));
  const double k = bound_kittaneh_sq(oracle::example_s());
  out.require(std::abs(k * k - 6.5) <= 1e-10, near("kittaneh_sq^2", k * k, 6.5, 1e-10));
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto t = bound_cor2(oracle::example_t());
  out.require(std::abs(t.star.value - 7.0 / 4) <= 1e-8, near("T beta1", t.star.value, 7.0 / 4, 1e-8));
  out.require(std::abs(t.plain.value - 22.0 / 13) <= 1e-8, near("T beta2", t.plain.value, 22.0 / 13, 1e-8));
  const auto s = bound_cor2(oracle::example_s());
  out.require(std::abs(s.star.value - 19.0 / 4) <= 1e-8, near("S beta1", s.star.value, 19.0 / 4, 1e-8));
  out.require(std::abs(s.plain.value - 37.0 / 8) <= 1e-8, near("S beta2", s.plain.value, 37.0 / 8, 1e-8));
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (int n = 2; n <= 12; ++n) {
    const double w = numerical_radius(shift_matrix<double>(n)).value;
    const double want = std::cos(std::numbers::pi / (n + 1));
    worst = std::max(worst, std::abs(w - want));
    out.require(std::abs(w - want) <= 1e-8, near(("w(S_" + std::to_string(n) + ")").c_str(), w, want, 1e-8));
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 5.0, "runtime " + num(elapsed) + " s >= 5 s");
  if (out.pass) out.detail = "max error " + num(worst);
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto p = MonicPolynomial<double>::from_descending({1, 2, 0, cd(0, 1), 0, cd(0, -1)});
  const double thm5 = zero_bound_thm5(p);
  out.require(std::abs(thm5 - 2.76634921105) <= 1e-8, near("thm5", thm5, 2.76634921105, 1e-8));
  out.require(zero_bound_cauchy(p) == 3.0, "cauchy = " + num(zero_bound_cauchy(p)));
  out.require(zero_bound_montel(p) == 4.0, "montel = " + num(zero_bound_montel(p)));
  const auto table = compare_bounds(p);
  out.require(table.max_root_modulus <= 2.76634921105, "max |root| = " + num(table.max_root_modulus));
  for (const auto& e : table.entries)
    out.require(e.bound >= table.max_root_modulus, e.method + " does not dominate max |root|");
  if (out.pass) out.detail = "max |root| = " + num(table.max_root_modulus);
  return out;
}

Outcome criterion6() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  verify::VerifyConfig config;
  config.trials = 200;
  config.dim_min = 2;
  config.dim_max = 6;
  config.seed = 42;
  config.tol = 1e-8;
  std::ostringstream log;
  const auto result = verify::run_verify(config, log);
  out.require(result.ok(), "verify reported violations:\n" + log.str());
  for (const char* name : {"sandwich_lower", "sandwich_upper", "prop1", "thm1_validity", "heinz_validity",
                           "thm2_validity", "thm3_validity", "cor1<=kittaneh_sq", "cor2<=abu_omar_kittaneh",
                           "cor3<=kittaneh_abs", "mixed_schwarz_gap", "mccarthy_gap", "buzano_gap"}) {
    bool seen = false;
    for (const auto& c : result.checks) seen = seen || (c.name == name && c.passed > 0);
    out.require(seen, std::string("check ") + name + " did not run");
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "runtime " + num(elapsed) + " s >= 60 s");
  return out;
}

Outcome criterion7() {
  Outcome out;
  oracle::Gen gen(7007);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(3, 5);
    const Mat h = gen.hermitian(n);
    const auto got = hermitian_eigen(h).eigenvalues;
    const auto want = oracle::eigenvalues_via_characteristic_polynomial(h);
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(got(k) - want[static_cast<std::size_t>(k)]));
  }
  out.require(worst <= 1e-9, "max eigenvalue deviation " + num(worst) + " > 1e-9");
  if (out.pass) out.detail = "max deviation " + num(worst);
  return out;
}

Outcome criterion8() {
  Outcome out;
  oracle::Gen gen(8008);
  double worst = 0;
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const MonicPolynomial<double> p(gen.unit_disk_coefficients(gen.integer(2, 8)));
    const auto blocks = companion_blocks(p);
    const double v = block_offdiag_bound(blocks.b, blocks.c).value;
    const double closed = (1 + tail_energy(p)) / 2;
    const double dev = std::abs(v * v - closed);
    worst = std::max(worst, dev);
    if (dev > 1e-9) ++failures;
  }
  out.require(failures == 0, std::to_string(failures) + "/20 polynomials differ from 1/2(1 + sum |a_i|^2) by more " +
                                 "than 1e-9 (max deviation " + num(worst) + ")");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8};
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  if (argc != 1 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::fprintf(stderr, "usage: acceptance [--criterion 1..%zu]\n", criteria.size());
    return 2;
  }

  bool all = true;
  for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) {
    if (only && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d: %s (%.3f s)%s%s\n", k, o.pass ? "PASS" : "FAIL", seconds_since(start),
                o.detail.empty() ? "" : " ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
