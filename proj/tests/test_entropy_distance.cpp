#include <doctest.h>

#include <cmath>

#include "entcorr/distance.hpp"
#include "entcorr/entropy.hpp"
#include "entcorr/error.hpp"
#include "entcorr/sampling.hpp"
#include "test_helpers.hpp"

using namespace entcorr;
using namespace entcorr::testing;

TEST_CASE("von Neumann entropy examples") {
  CHECK(von_neumann_entropy(bell_phi_plus().projector()) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("Shannon entropy and purity") {
  const Spectrum u4 = Spectrum::uniform(4);
  CHECK(shannon_entropy(u4) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(purity(u4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(shannon_entropy(Spectrum::point_mass()) == 0.0);
  CHECK(entropy_term(0.0) == 0.0);
}

TEST_CASE("majorization: point mass and uniform are extremes") {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const Spectrum p = random_spectrum(n, rng);
    CHECK(majorizes(Spectrum::point_mass(), p));
    CHECK(majorizes(p, Spectrum::uniform(n)));
    CHECK(majorizes(p, p));
  }
  CHECK_FALSE(majorizes(Spectrum::uniform(2), probs({0.9, 0.1})));
}

TEST_CASE("majorization is a partial order and entropy is Schur-concave") {
  Rng rng(37);
  int comparable = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Spectrum p = random_spectrum(4, rng);
    const Spectrum q = random_spectrum(4, rng);
    const Spectrum r = random_spectrum(4, rng);
    if (majorizes(p, q) && majorizes(q, p)) {
      const auto a = p.padded(4);
      const auto b = q.padded(4);
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
    }
    if (majorizes(p, q) && majorizes(q, r)) CHECK(majorizes(p, r));
    if (majorizes(p, q)) {
      ++comparable;
      CHECK(shannon_entropy(p) <= shannon_entropy(q) + 1e-12);
      CHECK(purity(p) >= purity(q) - 1e-12);
    }
  }
  CHECK(comparable > 100);
}

TEST_CASE("distance examples") {
  const DensityMatrix zero = PureState::basis(2, 0).projector();
  const DensityMatrix one = PureState::basis(2, 1).projector();
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  CHECK(bures_distance(half, half) == doctest::Approx(0.0));
  CHECK(hellinger_distance(zero, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(bures_distance(zero, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(bures_distance(half, zero) == doctest::Approx(0.76536686473017945).epsilon(1e-13));
  // Commuting pair: affinity = sum sqrt(p_i q_i) = sqrt(1/2).
  CHECK(hellinger_distance(half, zero) == doctest::Approx(0.76536686473017945).epsilon(1e-13));
  CHECK_THROWS_AS(bures_distance(-ComplexMatrix::Identity(2, 2), half.matrix()), DomainError);
}

TEST_CASE("distances: symmetry, range, identity of indiscernibles, D_B <= D_H") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
    const DensityMatrix a = random_density(dim, 1 + static_cast<std::size_t>(trial % 3), rng);
    const DensityMatrix b = random_density(dim, dim, rng);
    const double db = bures_distance(a, b);
    const double dh = hellinger_distance(a, b);
    CHECK(db == doctest::Approx(bures_distance(b, a)).epsilon(1e-9));
    CHECK(dh == doctest::Approx(hellinger_distance(b, a)).epsilon(1e-9));
    CHECK(db >= 0.0);
    CHECK(dh <= std::sqrt(2.0) + 1e-12);
    CHECK(db <= dh + 1e-9);
    CHECK(bures_distance(a, a) < 1e-6);
    CHECK(hellinger_distance(b, b) < 1e-7);
  }
}
