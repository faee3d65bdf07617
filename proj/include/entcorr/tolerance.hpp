#pragma once

namespace entcorr::tol {

// Input validation: Hermiticity, positivity, trace and norm.
inline constexpr double herm = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr double trace = 1e-9;
inline constexpr double norm = 1e-9;

// Eigenvalues at or below this are dropped from a Spectrum.
inline constexpr double zero = 1e-12;

// Round-trip checks (purify / partial trace, unitarity).
inline constexpr double num = 1e-8;

// Accepted shortfall of the stochastic optimizers against a known optimum.
inline constexpr double opt = 1e-3;

}  // namespace entcorr::tol
