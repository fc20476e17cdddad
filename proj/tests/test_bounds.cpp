#include <doctest.h>

#include "nrb/bounds.hpp"
#include "oracles.hpp"

using namespace nrb;
using oracle::cd;
using oracle::Mat;

namespace {

const Mat T = oracle::example_t();
const Mat S = oracle::example_s();
const Mat I3 = Mat::Identity(3, 3);
const Mat Z3 = Mat::Zero(3, 3);

// Grid reference for min over alpha of ||a A + (1-a) B||.
double grid_min_norm(const Mat& a, const Mat& b) {
  return oracle::grid_minimum([&](double al) { return oracle::spectral_norm(al * a + (1 - al) * b); });
}

// Grid reference for beta_1 / beta_2 on the w^2 scale.
double grid_beta(const Mat& t, Variant v) {
  const Mat a = t.adjoint() * t;
  const Mat b = t * t.adjoint();
  const double wsq = oracle::sampled_radius(t * t, 20000);
  return oracle::grid_minimum(
      [&](double al) {
        const Mat mix = v == Variant::star ? Mat(al / 4 * a + (1 - 3 * al / 4) * b) : Mat((1 - 3 * al / 4) * a + al / 4 * b);
        return al / 2 * wsq + oracle::spectral_norm(mix);
      },
      20000);
}

}  // namespace

TEST_CASE("minimize_over_alpha") {
  const auto lin = minimize_over_alpha<double>([](double a) { return a; });
  CHECK(lin.alpha_star == 0);
  CHECK(lin.value == 0);
  const auto rev = minimize_over_alpha<double>([](double a) { return 2 - a; });
  CHECK(rev.alpha_star == 1);
  const auto quad = minimize_over_alpha<double>([](double a) { return (a - 0.3) * (a - 0.3); });
  CHECK_NEAR(quad.alpha_star, 0.3, 1e-8);
}

TEST_CASE("alpha_min_norm") {
  const auto i = alpha_min_norm(oracle::diag({0, 1, 4}), oracle::diag({1, 4, 0}));
  CHECK_NEAR(i.value, 16.0 / 7, 1e-9);
  CHECK_NEAR(i.alpha_star, 4.0 / 7, 1e-6);

  const auto ii = alpha_min_norm(oracle::diag({0, 4, 9, 1}), oracle::diag({4, 9, 0, 1}));
  CHECK_NEAR(ii.value, 81.0 / 14, 1e-9);

  oracle::Gen gen(21);
  const Mat a = gen.psd(4);
  CHECK_NEAR(alpha_min_norm(a, a).value, oracle::spectral_norm(a), 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.integer(2, 5);
    const Mat x = gen.psd(n);
    const Mat y = gen.psd(n);
    const double v = alpha_min_norm(x, y).value;
    const double grid = grid_min_norm(x, y);
    CHECK(v <= grid + 1e-12);
    CHECK(grid - v <= 1e-9 * (1 + grid));
  }

  CHECK_THROWS_AS(alpha_min_norm(oracle::diag({-1, 1}), oracle::diag({1, 1})), NotPsd);
  CHECK_THROWS_AS(alpha_min_norm(oracle::diag({1, 1}), oracle::diag({1, 1, 1})), DimensionMismatch);
}

TEST_CASE("bound_thm1") {
  CHECK_NEAR(bound_thm1(T, 1.0, 0.5), std::sqrt(2.5), 1e-12);
  CHECK_NEAR(bound_thm1(T, 1.0, 4.0 / 7), std::sqrt(16.0 / 7), 1e-12);
  for (double r : {1.0, 1.5, 2.0, 3.7})
    for (double alpha : {0.0, 0.3, 1.0}) CHECK_NEAR(bound_thm1(I3, r, alpha), 1, 1e-12);

  const BoundContext<double> ctx(T);
  CHECK_NEAR(bound_thm1(ctx, 1.0, 0.5), bound_thm1(T, 1.0, 0.5), 1e-14);

  CHECK_THROWS_AS(bound_thm1(T, 1.0, 1.5), DomainError);
  CHECK_THROWS_AS(bound_thm1(T, 0.5, 0.5), DomainError);
}

TEST_CASE("bound_cor1 and bound_kittaneh_sq") {
  CHECK_NEAR(bound_cor1(T).value, std::sqrt(16.0 / 7), 1e-9);
  CHECK_NEAR(bound_cor1(T).alpha_star, 4.0 / 7, 1e-6);
  CHECK_NEAR(bound_cor1(S).value, std::sqrt(81.0 / 14), 1e-9);
  CHECK(bound_cor1(Z3).value == 0);

  CHECK_NEAR(bound_kittaneh_sq(T), std::sqrt(2.5), 1e-12);
  CHECK_NEAR(bound_kittaneh_sq(S), std::sqrt(6.5), 1e-12);
  CHECK_NEAR(bound_kittaneh_sq(I3), 1, 1e-12);

  const BoundContext<double> ctx(S);
  CHECK_NEAR(bound_cor1(ctx).value, bound_cor1(S).value, 1e-12);
}

TEST_CASE("bound_heinz") {
  CHECK_NEAR(bound_heinz(T, 1.0, 1.0, 0.5, Variant::star), std::sqrt(2.5), 1e-12);
  CHECK_NEAR(bound_heinz(T, 1.0, 1.0, 0.5, Variant::plain), bound_kittaneh_sq(T), 1e-12);

  oracle::Gen gen(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat t = gen.matrix(gen.integer(2, 5));
    for (double r : {1.0, 2.0}) {
      const double collapse = std::pow(
          oracle::spectral_norm((oracle::psd_power(t.adjoint() * t, r) + oracle::psd_power(t * t.adjoint(), r)) / 2.0),
          1 / (2 * r));
      CHECK_NEAR(bound_heinz(t, r, 1.0, 0.5, Variant::star), collapse, 1e-10);
    }
  }

  for (double r : {1.0, 1.5, 2.0})
    for (double alpha : {0.0, 0.5, 1.0})
      for (double lambda : {0.0, 0.5, 1.0})
        for (Variant v : {Variant::star, Variant::plain})
          CHECK_NEAR(bound_heinz(I3, r, alpha, lambda, v), 1, 1e-12);

  CHECK_THROWS_AS(bound_heinz(T, 1.0, 0.5, -0.1, Variant::star), DomainError);
}

TEST_CASE("w_of_square") {
  CHECK_NEAR(w_of_square(T), 1, 1e-10);
  CHECK_NEAR(w_of_square(S), 3, 1e-10);
  CHECK_NEAR(w_of_square(oracle::diag({1, -3, 2})), 9, 1e-10);
}

TEST_CASE("bound_thm2") {
  CHECK_NEAR(bound_thm2(T, 1.0, 1.0, Variant::star), std::sqrt(7.0 / 4), 1e-10);
  CHECK_NEAR(bound_thm2(T, 1.0, 0.0, Variant::star), operator_norm(T), 1e-12);
  CHECK_NEAR(bound_thm2(S, 1.0, 5.0 / 6, Variant::plain), std::sqrt(37.0 / 8), 1e-10);
  for (double r : {1.0, 2.0}) CHECK_NEAR(bound_thm2(I3, r, 0.4, Variant::plain), 1, 1e-10);
}

TEST_CASE("bound_cor2 and bound_abu_omar_kittaneh") {
  const auto t = bound_cor2(T);
  CHECK_NEAR(t.star.value, 7.0 / 4, 1e-8);
  CHECK_NEAR(t.plain.value, 22.0 / 13, 1e-8);
  CHECK_NEAR(t.plain.alpha_star, 12.0 / 13, 1e-6);
  CHECK(t.best_variant() == Variant::plain);
  CHECK_NEAR(t.value, std::sqrt(22.0 / 13), 1e-9);

  const auto s = bound_cor2(S);
  CHECK_NEAR(s.star.value, 19.0 / 4, 1e-8);
  CHECK_NEAR(s.plain.value, 37.0 / 8, 1e-8);
  CHECK_NEAR(s.plain.alpha_star, 5.0 / 6, 1e-6);
  CHECK_NEAR(s.value, std::sqrt(37.0 / 8), 1e-9);

  CHECK(bound_cor2(Z3).value == 0);

  CHECK_NEAR(bound_abu_omar_kittaneh(T), std::sqrt(7.0 / 4), 1e-10);
  CHECK_NEAR(bound_abu_omar_kittaneh(S), std::sqrt(19.0 / 4), 1e-10);
  CHECK_NEAR(bound_abu_omar_kittaneh(I3), 1, 1e-10);

  oracle::Gen gen(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat m = gen.matrix(gen.integer(2, 4));
    const auto c = bound_cor2(m);
    for (Variant v : {Variant::star, Variant::plain}) {
      const double grid = grid_beta(m, v);
      const double got = v == Variant::star ? c.star.value : c.plain.value;
      CHECK(std::abs(got - grid) <= 1e-6 * (1 + grid));
    }
  }
}

TEST_CASE("bound_thm3, bound_cor3 and bound_kittaneh_abs") {
  CHECK_NEAR(bound_thm3(T, 1.0, 1.0, Variant::star), 1.5, 1e-12);
  CHECK_NEAR(bound_thm3(T, 1.0, 1.0, Variant::plain), bound_kittaneh_abs(T), 1e-12);
  for (double r : {1.0, 1.5}) CHECK_NEAR(bound_thm3(I3, r, 0.5, Variant::star), 1, 1e-12);

  CHECK_NEAR(bound_kittaneh_abs(T), 1.5, 1e-12);
  CHECK_NEAR(bound_kittaneh_abs(I3), 1, 1e-12);
  Mat nil = Mat::Zero(2, 2);
  nil(0, 1) = 1;
  CHECK_NEAR(bound_kittaneh_abs(nil), 0.5, 1e-12);

  const auto c = bound_cor3(T);
  CHECK(c.value < bound_kittaneh_abs(T));
  const Mat mean_sq = oracle::diag({0.25, 2.25, 1});
  const double g1 = grid_min_norm(mean_sq, oracle::diag({1, 4, 0}));
  const double g2 = grid_min_norm(mean_sq, oracle::diag({0, 1, 4}));
  CHECK_NEAR(c.star.value, g1, 1e-8);
  CHECK_NEAR(c.plain.value, g2, 1e-8);
  CHECK_NEAR(c.value, std::sqrt(std::min(g1, g2)), 1e-8);

  oracle::Gen gen(24);
  const Mat normal = gen.normal(4);
  const auto cn = bound_cor3(normal);
  const double nsq = std::pow(oracle::singular_max(normal), 2);
  CHECK_NEAR(cn.star.value, nsq, 1e-9);
  CHECK_NEAR(cn.plain.value, nsq, 1e-9);

  CHECK(bound_cor3(Z3).value == 0);
}

TEST_CASE("check_prop1") {
  oracle::Gen gen(25);
  CHECK_NEAR(check_prop1(gen.unitary(4)), 0, 1e-12);
  CHECK_NEAR(check_prop1(T), 1, 1e-12);
  for (int trial = 0; trial < 200; ++trial) CHECK(check_prop1(gen.matrix(gen.integer(2, 6))) >= -1e-9);
}

TEST_CASE("validity and dominance on random matrices") {
  oracle::Gen gen(26);
  for (int trial = 0; trial < 60; ++trial) {
    const Mat t = gen.matrix(gen.integer(2, 6));
    const BoundContext<double> ctx(t);
    const double w = ctx.radius();
    CHECK_NEAR(w, numerical_radius(t).value, 1e-12);

    for (double r : {1.0, 1.5, 2.0})
      for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(bound_thm1(ctx, r, alpha) >= w - 1e-8);
        for (Variant v : {Variant::star, Variant::plain}) {
          CHECK(bound_thm2(ctx, r, alpha, v) >= w - 1e-8);
          CHECK(bound_thm3(ctx, r, alpha, v) >= w - 1e-8);
          for (double lambda : {0.0, 0.5, 1.0}) CHECK(bound_heinz(ctx, r, alpha, lambda, v) >= w - 1e-8);
        }
      }

    const double cor1 = bound_cor1(ctx).value;
    const double cor2 = bound_cor2(ctx).value;
    const double cor3 = bound_cor3(ctx).value;
    for (double b : {cor1, cor2, cor3}) CHECK(b >= w - 1e-8);
    CHECK(cor1 <= bound_kittaneh_sq(ctx) + 1e-10);
    CHECK(cor2 <= bound_abu_omar_kittaneh(ctx) + 1e-10);
    CHECK(cor3 <= bound_kittaneh_abs(ctx) + 1e-10);
  }
}

TEST_CASE("alpha optima are local minima") {
  oracle::Gen gen(27);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat t = gen.matrix(gen.integer(2, 6));
    const BoundContext<double> ctx(t);
    const Mat a = ctx.abs_power(2);
    const Mat b = ctx.adjoint_abs_power(2);
    auto f1 = [&](double al) { return oracle::spectral_norm(al * a + (1 - al) * b); };
    const auto c1 = bound_cor1(ctx);
    const double v1 = c1.value * c1.value;
    for (double d : {-0.01, 0.01}) {
      const double p = c1.alpha_star + d;
      if (p >= 0 && p <= 1) CHECK(v1 <= f1(p) + 1e-10);
    }

    const auto c2 = bound_cor2(ctx);
    const double wsq = ctx.square_radius();
    auto f2 = [&](double al) {
      return al / 2 * wsq + oracle::spectral_norm(al / 4 * a + (1 - 3 * al / 4) * b);
    };
    for (double d : {-0.01, 0.01}) {
      const double p = c2.star.alpha_star + d;
      if (p >= 0 && p <= 1) CHECK(c2.star.value <= f2(p) + 1e-10);
    }
  }
}

TEST_CASE("bound_cor1 is positively homogeneous") {
  oracle::Gen gen(28);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat t = gen.matrix(gen.integer(2, 5));
    const double c = gen.uniform(0.1, 10);
    CHECK_NEAR(bound_cor1(Mat(c * t)).value, c * bound_cor1(t).value, 1e-8);
  }
}

TEST_CASE("evaluate_all") {
  const auto t = evaluate_all(T);
  REQUIRE(t.entries.size() == 6);
  CHECK(t.consistent());
  CHECK(std::is_sorted(t.entries.begin(), t.entries.end(),
                       [](const auto& x, const auto& y) { return x.value < y.value; }));
  auto position = [&](const BoundReport<double>& rep, const std::string& name) {
    for (std::size_t k = 0; k < rep.entries.size(); ++k)
      if (rep.entries[k].name == name) return static_cast<int>(k);
    return -1;
  };
  CHECK(position(t, "cor1") < position(t, "kittaneh_sq"));
  CHECK(position(t, "cor2") < position(t, "abu_omar_kittaneh"));
  CHECK_NEAR(t.find("cor1")->value, std::sqrt(16.0 / 7), 1e-9);
  CHECK_NEAR(t.find("kittaneh_sq")->value, std::sqrt(2.5), 1e-10);
  CHECK_NEAR(t.find("cor2")->value, std::sqrt(22.0 / 13), 1e-9);
  CHECK_NEAR(t.find("abu_omar_kittaneh")->value, std::sqrt(7.0 / 4), 1e-10);
  CHECK_NEAR(t.computed_radius, std::sqrt(5.0) / 2, 1e-10);
  CHECK_NEAR(t.find("cor1")->slack, t.find("cor1")->value - t.computed_radius, 1e-15);
  REQUIRE(t.find("cor1")->params.has_value());
  CHECK_NEAR(*t.find("cor1")->params->alpha, 4.0 / 7, 1e-6);
  CHECK(t.find("nonexistent") == nullptr);

  const auto id = evaluate_all(I3);
  CHECK_NEAR(id.computed_radius, 1, 1e-12);
  for (const auto& e : id.entries) CHECK_NEAR(e.value, 1, 1e-9);

  const auto zero = evaluate_all(Z3);
  CHECK(zero.computed_radius == 0);
  for (const auto& e : zero.entries) CHECK(e.value == 0);
  // All values tie, so the order is by name.
  CHECK(std::is_sorted(zero.entries.begin(), zero.entries.end(),
                       [](const auto& x, const auto& y) { return x.name < y.name; }));

  ReportConfig<double> config;
  config.r_values = {1.0, 2.0};
  const auto r2 = evaluate_all(S, config);
  CHECK(r2.entries.size() == 11);
  REQUIRE(r2.find("thm1(r=2)") != nullptr);
  CHECK(r2.find("thm3_plain(r=2)") != nullptr);
  CHECK(r2.consistent());

  config.r_values = {0.5};
  CHECK_THROWS_AS(evaluate_all(T, config), DomainError);
}
