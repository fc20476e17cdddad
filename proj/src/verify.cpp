#include "nrb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "nrb/bounds.hpp"
#include "nrb/io.hpp"
#include "nrb/numrange.hpp"

namespace nrb::verify {

namespace {

constexpr double kSpecGapTol = 1e-10;
// Below this the comparisons are dominated by double rounding.
constexpr double kResolutionFloor = 64 * std::numeric_limits<double>::epsilon();

constexpr double kRValues[] = {1.0, 1.5, 2.0};
constexpr double kAlphaValues[] = {0.0, 0.25, 0.5, 0.75, 1.0};
constexpr double kLambdaValues[] = {0.0, 0.5, 1.0};
constexpr int kVectorsPerTrial = 5;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

class Recorder {
 public:
  Recorder(const VerifyConfig& config, std::ostream& log) : config_(config), log_(log) {}

  void begin_trial(int trial, const ComplexMatrix<double>& t) {
    trial_ = trial;
    matrix_ = &t;
  }

  void record(const std::string& check, double slack, double tol, const std::string& detail = {}) {
    auto [it, inserted] = index_.try_emplace(check, stats_.size());
    if (inserted) stats_.push_back(CheckStats{check});
    CheckStats& s = stats_[it->second];
    s.worst_slack = std::min(s.worst_slack, slack);
    if (slack >= -tol) {
      ++s.passed;
      return;
    }
    ++s.failed;
    if (s.failed > 1) return;  // one full report per check
    log_ << "VIOLATION " << check << ": slack " << fmt(slack) << " < -" << fmt(tol);
    if (!detail.empty()) log_ << " [" << detail << "]";
    if (tol < kResolutionFloor) {
      log_ << " (tolerance too strict: " << fmt(tol) << " is below double-precision resolution)";
    }
    log_ << "\n  reproduce: seed=" << config_.seed << " trial=" << trial_
         << "\n  matrix: " << io::write_matrix_document(*matrix_) << "\n";
  }

  VerifyOutcome outcome() const { return {stats_}; }

 private:
  const VerifyConfig& config_;
  std::ostream& log_;
  std::vector<CheckStats> stats_;
  std::map<std::string, std::size_t> index_;
  int trial_ = 0;
  const ComplexMatrix<double>* matrix_ = nullptr;
};

std::string params(double r, double alpha, double lambda, Variant v) {
  std::ostringstream os;
  os << "r=" << r << " alpha=" << alpha;
  if (lambda >= 0) os << " lambda=" << lambda;
  os << " variant=" << to_string(v);
  return os.str();
}

void run_trial(const ComplexMatrix<double>& t, Rng& rng, const VerifyConfig& config, Recorder& rec) {
  const double tol = config.tol;
  const double strict = std::min(tol, kSpecGapTol);
  const BoundContext<double> ctx(t);
  const double w = ctx.radius();
  const double norm = ctx.norm();

  rec.record("sandwich_lower", w - norm / 2, tol);
  rec.record("sandwich_upper", norm - w, tol);
  rec.record("prop1", check_prop1(ctx), tol);

  for (double r : kRValues) {
    for (double alpha : kAlphaValues) {
      rec.record("thm1_validity", bound_thm1(ctx, r, alpha) - w, tol, params(r, alpha, -1, Variant::star));
      for (Variant v : {Variant::star, Variant::plain}) {
        rec.record("thm2_validity", bound_thm2(ctx, r, alpha, v) - w, tol, params(r, alpha, -1, v));
        rec.record("thm3_validity", bound_thm3(ctx, r, alpha, v) - w, tol, params(r, alpha, -1, v));
        for (double lambda : kLambdaValues) {
          rec.record("heinz_validity", bound_heinz(ctx, r, alpha, lambda, v) - w, tol, params(r, alpha, lambda, v));
        }
      }
    }
  }

  const double cor1 = bound_cor1(ctx).value;
  const double cor2 = bound_cor2(ctx).value;
  const double cor3 = bound_cor3(ctx).value;
  const double k_sq = bound_kittaneh_sq(ctx);
  const double aok = bound_abu_omar_kittaneh(ctx);
  const double k_abs = bound_kittaneh_abs(ctx);
  for (double b : {cor1, cor2, cor3}) rec.record("corollary_validity", b - w, tol);
  for (double b : {k_sq, aok, k_abs}) rec.record("baseline_validity", b - w, tol);
  rec.record("cor1<=kittaneh_sq", k_sq - cor1, strict);
  rec.record("cor2<=abu_omar_kittaneh", aok - cor2, strict);
  rec.record("cor3<=kittaneh_abs", k_abs - cor3, strict);

  const int n = static_cast<int>(t.rows());
  const ComplexMatrix<double> gram = ctx.abs_power(2);
  for (int k = 0; k < kVectorsPerTrial; ++k) {
    const auto x = UnitVector<double>::normalized(random_vector(n, rng));
    const ComplexVector<double> a = random_vector(n, rng);
    const ComplexVector<double> b = random_vector(n, rng);
    rec.record("mixed_schwarz_gap", mixed_schwarz_gap(t, x), strict);
    rec.record("buzano_gap", buzano_gap(a, x, b), strict);
    for (double r : kRValues) {
      const std::string detail = "r=" + std::to_string(r);
      rec.record("mccarthy_gap", mccarthy_gap(gram, x, r), strict, detail);
      rec.record("buzano_power_gap", buzano_power_gap(t, x, r), strict, detail);
    }
  }
}

}  // namespace

void VerifyConfig::validate() const {
  if (trials < 1) throw DomainError("verify: trials must be at least 1");
  if (dim_min < 2 || dim_min > dim_max) throw DomainError("verify: need 2 <= dim-min <= dim-max");
  if (!(tol > 0) || !std::isfinite(tol)) throw DomainError("verify: tol must be positive");
}

bool VerifyOutcome::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckStats& c) { return c.failed == 0; });
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform_pm1() {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * u - 1.0;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  Rng mix(seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(trial) + 1)));
  return mix.next();
}

ComplexMatrix<double> random_matrix(int n, Rng& rng) {
  ComplexMatrix<double> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.uniform_pm1();
      m(i, j) = {re, rng.uniform_pm1()};
    }
  return m;
}

ComplexVector<double> random_vector(int n, Rng& rng) {
  ComplexVector<double> v(n);
  for (int i = 0; i < n; ++i) {
    const double re = rng.uniform_pm1();
    v(i) = {re, rng.uniform_pm1()};
  }
  return v;
}

VerifyOutcome run_verify(const VerifyConfig& config, std::ostream& log) {
  config.validate();
  Recorder rec(config, log);
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng(trial_seed(config.seed, trial));
    const int n = rng.uniform_int(config.dim_min, config.dim_max);
    const ComplexMatrix<double> t = random_matrix(n, rng);
    rec.begin_trial(trial, t);
    run_trial(t, rng, config, rec);
  }
  const VerifyOutcome outcome = rec.outcome();

  std::size_t width = 5;
  for (const auto& c : outcome.checks) width = std::max(width, c.name.size());
  char line[160];
  std::snprintf(line, sizeof line, "%-*s  %8s  %8s  %s\n", static_cast<int>(width), "check", "passed", "failed",
                "worst_slack");
  log << line;
  for (const auto& c : outcome.checks) {
    std::snprintf(line, sizeof line, "%-*s  %8ld  %8ld  %s\n", static_cast<int>(width), c.name.c_str(), c.passed,
                  c.failed, fmt(c.worst_slack).c_str());
    log << line;
  }
  log << "verify: " << (outcome.ok() ? "PASS" : "FAIL") << " (seed=" << config.seed << ", trials=" << config.trials
      << ", dims " << config.dim_min << ".." << config.dim_max << ", tol=" << fmt(config.tol) << ")\n";
  return outcome;
}

}  // namespace nrb::verify
