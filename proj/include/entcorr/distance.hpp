#pragma once

#include "entcorr/state.hpp"

namespace entcorr {

/// tr sqrt( sqrt(rho) sigma sqrt(rho) ), the root fidelity.
double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// tr sqrt(rho) sqrt(sigma).
double affinity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// (2 - 2 tr sqrt(sqrt(rho) sigma sqrt(rho)))^(1/2), in [0, sqrt 2].
double bures_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (2 - 2 tr sqrt(rho) sqrt(sigma))^(1/2), in [0, sqrt 2].
double hellinger_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double hellinger_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(max(0, 2 - 2 overlap)); shared by both distances.
double distance_from_overlap(double overlap);

}  // namespace entcorr
