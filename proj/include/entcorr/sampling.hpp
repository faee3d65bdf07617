#pragma once

#include <cstddef>

#include "entcorr/rng.hpp"
#include "entcorr/state.hpp"

namespace entcorr {

/// Vector of i.i.d. standard complex Gaussians (unit variance per component).
ComplexVector complex_gaussian_vector(std::size_t n, Rng& rng);
ComplexMatrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed pure state (normalized complex Gaussian vector).
PureState haar_pure(std::size_t dim, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal absorbed into Q.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

/// Induced-measure mixed state: partial trace of a Haar pure state on dim x ancilla_dim.
DensityMatrix random_density(std::size_t dim, std::size_t ancilla_dim, Rng& rng);

/// Sorted normalized i.i.d. exponentials (uniform on the simplex, then ordered).
Spectrum random_spectrum(std::size_t size, Rng& rng);

/// Random Hermitian matrix with i.i.d. Gaussian entries, scaled to unit Frobenius norm.
ComplexMatrix random_hermitian_direction(std::size_t dim, Rng& rng);

}  // namespace entcorr
