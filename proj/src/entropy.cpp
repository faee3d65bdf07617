#include "entcorr/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace entcorr {

double entropy_term(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

double shannon_entropy(const Spectrum& p) {
  double h = 0.0;
  for (double x : p.components()) h += entropy_term(x);
  return h;
}

double purity(const Spectrum& p) {
  double s = 0.0;
  for (double x : p.components()) s += x * x;
  return s;
}

bool majorizes(const Spectrum& p, const Spectrum& q, double slack) {
  const std::size_t n = std::max(p.size(), q.size());
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sp += p[k];
    sq += q[k];
    if (sp < sq - slack) return false;
  }
  return true;
}

double von_neumann_entropy(const DensityMatrix& rho) { return shannon_entropy(spectrum(rho)); }

}  // namespace entcorr
