#pragma once

#include "entcorr/state.hpp"

namespace entcorr {

/// -x ln x with the convention 0 ln 0 = 0.
double entropy_term(double x);

/// Shannon entropy in nats.
double shannon_entropy(const Spectrum& p);

/// Sum of squared components.
double purity(const Spectrum& p);

/// True iff every partial sum of p dominates the matching partial sum of q
/// (the shorter vector is zero padded). A small slack absorbs rounding.
bool majorizes(const Spectrum& p, const Spectrum& q, double slack = 1e-12);

/// von Neumann entropy in nats, from the spectrum of rho.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace entcorr
