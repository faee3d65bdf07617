#include <doctest.h>

#include <cmath>

#include "entcorr/bounds.hpp"
#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/measures.hpp"
#include "entcorr/sampling.hpp"
#include "test_helpers.hpp"

using namespace entcorr;
using namespace entcorr::testing;

namespace {
const double kLn2 = std::log(2.0);
constexpr MonotoneKind kDistanceKinds[] = {MonotoneKind::bures, MonotoneKind::hellinger};
}  // namespace

TEST_CASE("v and w_pm") {
  CHECK(v(0.0) == 0.0);
  CHECK(v(1.0) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(v(0.5) == doctest::Approx(0.24577536666847116).epsilon(1e-14));
  CHECK(v(0.6) == doctest::Approx(0.3250829733914482).epsilon(1e-14));
  CHECK(v(0.7) == doctest::Approx(0.41024429307387444).epsilon(1e-14));
  CHECK(w_pm(0.0, Sign::minus) == 0.0);
  CHECK(w_pm(1.0, Sign::plus) == doctest::Approx(kLn2 / 2.0));
  CHECK_THROWS_AS(v(1.1), DomainError);
  CHECK_THROWS_AS(v(-0.1), DomainError);
  double previous = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double value = v(k / 1000.0);
    CHECK(value >= previous);
    previous = value;
  }
}

TEST_CASE("u: pieces, continuity, domain") {
  CHECK(u(0.0) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(u(0.5) == doctest::Approx(v(0.5)));
  CHECK(u(0.6) == doctest::Approx(v(0.2)));
  CHECK(u(2.0 / 3.0) == doctest::Approx(0.0));
  CHECK(u(0.7) == 0.0);
  CHECK(u(0.75) == 0.0);
  const double eps = 1e-13;
  CHECK(std::abs(u(0.5 - eps) - u(0.5 + eps)) < 1e-12);
  CHECK(std::abs(u(2.0 / 3.0 - eps) - u(2.0 / 3.0 + eps)) < 1e-6);  // v has infinite slope at 0
  CHECK(u(2.0 / 3.0 + eps) == 0.0);
  CHECK_THROWS_AS(u(0.76), DomainError);
  CHECK_THROWS_AS(u(-0.01), DomainError);
}

TEST_CASE("u is continuous at its breakpoints to 1e-12 on straddling points") {
  // Straddle at the representable neighbours of the breakpoints.
  const double half = 0.5;
  CHECK(std::abs(u(std::nextafter(half, 0.0)) - u(std::nextafter(half, 1.0))) < 1e-12);
  const double two_thirds = 2.0 / 3.0;
  CHECK(std::abs(u(std::nextafter(two_thirds, 0.0)) - u(std::nextafter(two_thirds, 1.0))) < 1e-12);
}

TEST_CASE("thresholds") {
  CHECK(threshold(MonotoneKind::hellinger) == doctest::Approx(1.1547005383792515).epsilon(1e-15));
  CHECK(threshold(MonotoneKind::bures) == doctest::Approx(0.91940168676196621).epsilon(1e-15));
  for (MonotoneKind k : kDistanceKinds) {
    CHECK(deficit_of_correlation(k, threshold(k)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(xi_ef(k, threshold(k)) < 1e-6);
    CHECK(xi_ef(k, threshold(k) * (1.0 + 1e-12)) == 0.0);
    CHECK(xi_ef(k, 0.999 * threshold(k)) > 0.0);
  }
  CHECK_THROWS_AS(threshold(MonotoneKind::mutual_information), DomainError);
}

TEST_CASE("xi endpoints and domain") {
  for (MonotoneKind k : kDistanceKinds) {
    CHECK(xi_ef(k, 0.0) == doctest::Approx(kLn2).epsilon(1e-15));
    CHECK(xi_ef(k, c_max(k, 4)) == 0.0);
    CHECK_THROWS_AS(xi_ef(k, c_max(k, 4) + 1e-6), DomainError);
    CHECK_THROWS_AS(xi_ef(k, -1e-6), DomainError);
  }
  // bures at x = 1: deficit 3/4, the maximally mixed spectrum
  CHECK(deficit_of_correlation(MonotoneKind::bures, 1.0) == doctest::Approx(0.75));
  CHECK(deficit_of_correlation(MonotoneKind::hellinger, std::sqrt(1.5)) == doctest::Approx(0.75));
  CHECK_THROWS_AS(xi_ef(MonotoneKind::mutual_information, 0.1), DomainError);
}

TEST_CASE("xi equals ln 2 - s22 on the optimal slice spectra") {
  for (int k = 0; k <= 100; ++k) {
    const double y = 0.75 * k / 100.0;
    std::vector<double> p;
    if (y <= 0.5) {
      p = {1.0 - y, y};
    } else if (y <= 2.0 / 3.0) {
      p = {1.0 - y, 1.0 - y, 2.0 * y - 1.0};
    } else {
      p = {1.0 - y, y / 3.0, y / 3.0, y / 3.0};
    }
    const Spectrum s = Spectrum::from_weights(p);
    CHECK(std::abs(u(y) - (kLn2 - s22_ef(s))) < 1e-12);
  }
}

TEST_CASE("zeta: Hellinger equals the Bures xi, mutual information is xi at 2x") {
  for (int k = 0; k <= 50; ++k) {
    const double x = k / 50.0;
    CHECK(zeta_ef(MonotoneKind::hellinger, x) == xi_ef(MonotoneKind::bures, x));
  }
  CHECK_THROWS_AS(zeta_ef(MonotoneKind::bures, 0.5), DomainError);
  CHECK_THROWS_AS(zeta_ef(MonotoneKind::hellinger, 1.01), DomainError);
  const auto identity = [](double x) { return x; };
  CHECK(zeta_mi_of_xi(identity, 0.3) == doctest::Approx(0.6));
  CHECK_THROWS_AS(zeta_mi_of_xi(identity, std::log(4.0) + 1e-6), DomainError);
}

TEST_CASE("curves are non-increasing on 1e3-point grids") {
  for (MonotoneKind k : kDistanceKinds) {
    const BoundCurve curve = xi_curve(k, 1000);
    REQUIRE(curve.samples.size() == 1000);
    CHECK(curve.samples.front().x == 0.0);
    CHECK(curve.samples.back().x == c_max(k, 4));
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
      CHECK(curve.samples[i].bound <= curve.samples[i - 1].bound);
  }
  const BoundCurve zeta = zeta_curve(MonotoneKind::hellinger, 1000);
  CHECK(zeta.samples.back().x == 1.0);
  for (std::size_t i = 1; i < zeta.samples.size(); ++i) CHECK(zeta.samples[i].bound <= zeta.samples[i - 1].bound);
}

TEST_CASE("beta_deform examples") {
  const Spectrum p = probs({0.7, 0.3});
  CHECK(beta_deform(p, 1.0) == p);
  const Spectrum squared = beta_deform(p, 2.0);
  CHECK(squared[0] == doctest::Approx(49.0 / 58.0).epsilon(1e-15));
  CHECK(squared[1] == doctest::Approx(9.0 / 58.0).epsilon(1e-15));
  CHECK(beta_deform(p, 500.0)[0] == doctest::Approx(1.0));

  const Spectrum tie = Spectrum::uniform(2);
  CHECK(tie_split_limit(tie) == doctest::Approx(0.5));
  const Spectrum split = beta_deform(tie, 1.25);
  CHECK(split[0] == doctest::Approx(0.75));
  CHECK(split[1] == doctest::Approx(0.25));
  CHECK(beta_deform(tie, 1.5) == Spectrum::point_mass());
  CHECK(beta_deform(tie, 40.0)[0] == doctest::Approx(1.0));

  const Spectrum u3 = Spectrum::uniform(3);
  CHECK(tie_split_limit(u3) == doctest::Approx(2.0 / 3.0));
  CHECK(tie_split_limit(probs({0.4, 0.4, 0.2})) == doctest::Approx(0.2));
  CHECK(tie_split_limit(p) == 0.0);
  CHECK_THROWS_AS(beta_deform(p, 0.99), DomainError);
}

namespace {

// Random spectra with a tie at the top half of the time.
Spectrum random_test_spectrum(Rng& rng, int trial) {
  const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
  Spectrum p = random_spectrum(n, rng);
  if (trial % 2 == 0) return p;
  std::vector<double> w(p.components().begin(), p.components().end());
  const std::size_t tied = 2 + static_cast<std::size_t>(trial / 2) % (n - 1);
  for (std::size_t i = 1; i < tied; ++i) w[i] = w[0];
  return Spectrum::from_weights(w);
}

}  // namespace

TEST_CASE("beta family: majorization, endpoints and continuity on 1e4 pairs") {
  Rng rng(307);
  for (int trial = 0; trial < 10000; ++trial) {
    const Spectrum p = random_test_spectrum(rng, trial);
    const double beta = 1.0 + 20.0 * rng.uniform();
    const Spectrum q = beta_deform(p, beta);
    CHECK(majorizes(q, p));
    CHECK(beta_deform(p, 1.0) == p);
    // monotone along the family
    CHECK(majorizes(beta_deform(p, beta + 0.5), q));
    // continuity: a small step in beta moves f by a small amount
    const double step = 1e-7;
    for (MonotoneKind k : {MonotoneKind::mutual_information, MonotoneKind::bures, MonotoneKind::hellinger}) {
      const double jump = std::abs(f_kind(k, beta_deform(p, beta + step)) - f_kind(k, q));
      CHECK(jump < 1e-4);
    }
  }
}

TEST_CASE("beta family: f decreases to the point mass") {
  Rng rng(311);
  for (int trial = 0; trial < 200; ++trial) {
    const Spectrum p = random_test_spectrum(rng, trial);
    double previous = f_db(p);
    for (double beta = 1.1; beta < 200.0; beta *= 1.3) {
      const double value = f_db(beta_deform(p, beta));
      CHECK(value <= previous + 1e-15);
      previous = value;
    }
    CHECK(f_db(beta_deform(p, 1e6)) < 1e-6);
  }
}

TEST_CASE("solve_beta reaches any target within 1e-9") {
  Rng rng(313);
  const auto f = [](const Spectrum& s) { return f_db(s); };
  for (int trial = 0; trial < 500; ++trial) {
    const Spectrum q = random_test_spectrum(rng, trial);
    const double target = f(q) * rng.uniform();
    const BetaSolution sol = solve_beta(q, f, target);
    CHECK(std::abs(sol.value - target) <= 1e-9);
    CHECK(std::abs(f(sol.p) - sol.value) < 1e-15);
  }
  CHECK(solve_beta(Spectrum::uniform(4), f, 1.0).beta == 1.0);
  CHECK_THROWS_AS(solve_beta(probs({0.9, 0.1}), f, 1.0), DomainError);
}

TEST_CASE("g_d: zero at the origin and the analytic xi on sample points") {
  for (MonotoneKind k : kDistanceKinds) {
    CHECK(g_d_numeric(k, 4, 0.0) == 0.0);
    for (double t : {0.2, 0.5, 0.8, 0.95}) {
      const double x = t * c_max(k, 4);
      CHECK(std::abs((kLn2 - g_d_numeric(k, 4, x, 60)) - xi_ef(k, x)) < 1e-3);
    }
  }
  CHECK(g_d_numeric(MonotoneKind::mutual_information, 4, 0.0, 20) == doctest::Approx(0.0));
  CHECK(g_d_numeric(MonotoneKind::mutual_information, 4, 2.0 * std::log(4.0), 20) == doctest::Approx(kLn2));
  CHECK_THROWS_AS(g_d_numeric(MonotoneKind::bures, 6, 0.1), DomainError);
  CHECK_THROWS_AS(g_d_numeric(MonotoneKind::bures, 4, 1.5), DomainError);
  CHECK_THROWS_AS(g_d_numeric(MonotoneKind::bures, 4, 0.5, 1), DomainError);
}

TEST_CASE("g_d(f(p)) <= s22(p) on random spectra") {
  Rng rng(317);
  for (int trial = 0; trial < 60; ++trial) {
    const Spectrum p = random_spectrum(1 + static_cast<std::size_t>(trial % 4), rng);
    for (MonotoneKind k : {MonotoneKind::mutual_information, MonotoneKind::bures, MonotoneKind::hellinger}) {
      const double x = std::min(f_kind(k, p), c_max(k, 4));
      CHECK(g_d_numeric(k, 4, x, 40) <= s22_ef(p) + 1e-9);
    }
  }
}

TEST_CASE("g_d is non-decreasing") {
  for (MonotoneKind k : {MonotoneKind::mutual_information, MonotoneKind::bures, MonotoneKind::hellinger}) {
    double previous = 0.0;
    for (double x : linear_grid(c_max(k, 4), 25)) {
      const double g = g_d_numeric(k, 4, x, 40);
      CHECK(g >= previous - 1e-9);
      previous = g;
    }
  }
}

TEST_CASE("mutual-information xi table") {
  const MutualInformationXi xi(129, 40);
  CHECK(xi(0.0) == doctest::Approx(kLn2));
  CHECK(xi(xi.upper()) == doctest::Approx(0.0));
  double previous = xi(0.0);
  for (double x : linear_grid(xi.upper(), 1000)) {
    CHECK(xi(x) <= previous + 1e-12);
    previous = xi(x);
  }
  CHECK_THROWS_AS(xi(-0.1), DomainError);
}

TEST_CASE("renyi_threshold") {
  CHECK(renyi_threshold(2, 2, 1.0) == doctest::Approx(1.3446276944532238).epsilon(1e-15));
  CHECK(renyi_threshold(2, 2, 1e-12) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(renyi_threshold(2, 3, 1.0) < std::log(6.0));
  CHECK_THROWS_AS(renyi_threshold(2, 2, 0.0), DomainError);
  CHECK_THROWS_AS(renyi_threshold(2, 2, 1.5), DomainError);
}

TEST_CASE("linear_grid endpoints") {
  const auto xs = linear_grid(std::sqrt(1.5), 7);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == std::sqrt(1.5));
  CHECK_THROWS_AS(linear_grid(1.0, 1), DomainError);
}
