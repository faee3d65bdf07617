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
const BipartiteSplit kQubits(2, 2);
const double kLn2 = std::log(2.0);
}  // namespace

TEST_CASE("concurrence examples") {
  CHECK(concurrence(bell_phi_plus().projector()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(DensityMatrix::maximally_mixed(4)) == doctest::Approx(0.0));
  CHECK(concurrence(werner(0.8)) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(concurrence(werner(0.3)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(concurrence(DensityMatrix::maximally_mixed(3)), DomainError);
}

TEST_CASE("entanglement of formation examples") {
  CHECK(entanglement_of_formation(bell_phi_plus().projector()) == doctest::Approx(kLn2).epsilon(1e-12));
  const std::vector<double> d{0.4, 0.3, 0.2, 0.1};
  CHECK(entanglement_of_formation(DensityMatrix::diagonal(d)) == doctest::Approx(0.0));
  // concurrence 0.5 via max_ef_state on (0.5, 0.5)
  CHECK(entanglement_of_formation(max_ef_state(probs({0.5, 0.5}))) ==
        doctest::Approx(0.24577536666847116).epsilon(1e-12));
  CHECK(entanglement(MeasureTag::entanglement_of_formation, werner(0.8), kQubits).value ==
        doctest::Approx(0.41024429307387444).epsilon(1e-12));
  CHECK_THROWS_AS(entanglement(MeasureTag::entanglement_of_formation, DensityMatrix::maximally_mixed(8),
                               BipartiteSplit(2, 4)),
                  DomainError);
}

TEST_CASE("negativity examples") {
  CHECK(negativity(PureState::basis(4, 0).projector(), kQubits) == doctest::Approx(0.0));
  CHECK(negativity(bell_phi_plus().projector(), kQubits) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(negativity(DensityMatrix::maximally_mixed(4), kQubits) == doctest::Approx(0.0));
  CHECK(negativity(werner(0.8), kQubits) == doctest::Approx(0.35).epsilon(1e-12));
  CHECK_THROWS_AS(negativity(DensityMatrix::maximally_mixed(4), BipartiteSplit(2, 3)), DomainError);
}

TEST_CASE("property: E_f = 0 iff negativity = 0 on random two-qubit states") {
  Rng rng(101);
  int entangled = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho = random_density(4, 1 + static_cast<std::size_t>(trial % 6), rng);
    const bool ef_zero = entanglement_of_formation(rho) <= 1e-9;
    const bool neg_zero = negativity(rho, kQubits) <= 1e-9;
    CHECK(ef_zero == neg_zero);
    if (!ef_zero) ++entangled;
  }
  CHECK(entangled > 100);
  CHECK(entangled < 1000);
}

TEST_CASE("property: E_f is invariant under local unitaries") {
  Rng rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho = random_density(4, 1 + static_cast<std::size_t>(trial % 4), rng);
    const ComplexMatrix u = kron(haar_unitary(2, rng), haar_unitary(2, rng));
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
    CHECK(std::abs(entanglement_of_formation(rho) - entanglement_of_formation(rotated)) < 1e-9);
  }
}

TEST_CASE("s22_ef examples") {
  CHECK(s22_ef(Spectrum::point_mass()) == doctest::Approx(0.0));
  CHECK(s22_ef(Spectrum::uniform(4)) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(s22_ef(probs({0.5, 0.5})) == doctest::Approx(0.44737181389147412).epsilon(1e-13));
  CHECK_THROWS_AS(s22_ef(Spectrum::uniform(5)), DomainError);
}

TEST_CASE("s22_ef is monotone along majorization") {
  Rng rng(107);
  int comparable = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Spectrum p = random_spectrum(1 + static_cast<std::size_t>(trial % 4), rng);
    const Spectrum q = random_spectrum(4, rng);
    if (majorizes(p, q)) {
      ++comparable;
      CHECK(s22_ef(p) <= s22_ef(q) + 1e-12);
    }
  }
  CHECK(comparable > 100);
}

TEST_CASE("max_ef_state examples") {
  const DensityMatrix bell = max_ef_state(Spectrum::point_mass());
  CHECK(entanglement_of_formation(bell) == doctest::Approx(kLn2).epsilon(1e-12));
  const DensityMatrix mixed = max_ef_state(Spectrum::uniform(4));
  CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);
  CHECK(concurrence(max_ef_state(probs({0.6, 0.4}))) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("max_ef_state: spectrum preserved and concurrence matches the closed form") {
  Rng rng(109);
  for (int trial = 0; trial < 1000; ++trial) {
    const Spectrum p = random_spectrum(1 + static_cast<std::size_t>(trial % 4), rng);
    const DensityMatrix rho = max_ef_state(p);
    const auto got = spectrum(rho).padded(4);
    const auto want = p.padded(4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-12);
    CHECK(std::abs(concurrence(rho) - max_orbit_concurrence(p)) < 1e-9);
    CHECK(std::abs(entanglement_of_formation(rho) - (kLn2 - s22_ef(p))) < 1e-9);
  }
}

TEST_CASE("max_ef_state agrees with the unitary-orbit search") {
  // Oracle for the pairing of eigenvalues with eigenvectors: brute-force search over
  // the orbit must not beat the construction, and must reach it.
  OrbitSearchOptions options;
  options.restarts = 10;
  options.iterations = 2000;
  Rng rng(113);
  const std::vector<Spectrum> cases{probs({0.6, 0.4}), probs({0.5, 0.3, 0.2}), probs({0.7, 0.1, 0.1, 0.1}),
                                    probs({0.4, 0.3, 0.2, 0.1}), probs({0.45, 0.35, 0.15, 0.05})};
  for (const Spectrum& p : cases) {
    const OrbitSearchResult found = max_ef_over_orbit(p, options, rng);
    const double exact = concurrence(max_ef_state(p));
    CHECK(found.concurrence <= exact + 1e-9);
    CHECK(found.concurrence == doctest::Approx(exact).epsilon(1e-3));
  }
}

TEST_CASE("max_ef_over_spectrum_numeric examples") {
  OrbitSearchOptions options;
  options.restarts = 4;
  options.iterations = 1000;
  Rng rng(127);
  CHECK(max_ef_over_spectrum_numeric(Spectrum::point_mass(), options, rng) == doctest::Approx(kLn2).epsilon(1e-6));
  CHECK(max_ef_over_spectrum_numeric(Spectrum::uniform(4), options, rng) == 0.0);
  CHECK(std::abs(max_ef_over_spectrum_numeric(probs({0.5, 0.5}), options, rng) - 0.24577536666847116) < 1e-3);
}

TEST_CASE("separability criteria examples") {
  CHECK(is_zhsl_separable(Spectrum::uniform(4), 4));
  CHECK_FALSE(is_zhsl_separable(probs({0.7, 0.3}), 4));
  CHECK(is_abs_separable_2xd(probs({0.4, 0.3, 0.2, 0.1}), 2));
  CHECK_FALSE(is_abs_separable_2xd(probs({0.9, 0.1}), 2));
}

TEST_CASE("two-qubit absolute separability matches a vanishing orbit bound") {
  Rng rng(131);
  for (int trial = 0; trial < 2000; ++trial) {
    const Spectrum p = random_spectrum(4, rng);
    CHECK(is_abs_separable_2xd(p, 2) == (max_orbit_concurrence(p) == 0.0));
    if (is_zhsl_separable(p, 4)) CHECK(is_abs_separable_2xd(p, 2));
  }
}

TEST_CASE("decomposition bound and folding channel bracket E_f") {
  Rng rng(137);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_density(4, 2, rng);
    const double ef = entanglement_of_formation(rho);
    CHECK(ef <= ef_decomposition_upper_bound(rho, kQubits) + 1e-12);
    // On (2, 2) the fold is the identity channel.
    CHECK(max_abs_diff(fold_second_factor(rho, kQubits).matrix(), rho.matrix()) < 1e-15);
  }
}
