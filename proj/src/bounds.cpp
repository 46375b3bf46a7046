#include "rootpath/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rootpath/errors.h"

namespace rootpath {

namespace {

// max_{i<d} |c_i/c_d|^{1/(d-i)}, no factor 2.
double ratio_max(std::span<const Complex> c) {
  const int d = static_cast<int>(c.size()) - 1;
  const double lead = std::abs(c[d]);
  double m = 0.0;
  for (int i = 0; i < d; ++i) {
    const double r = std::abs(c[i]) / lead;
    if (r > 0.0) m = std::max(m, std::pow(r, 1.0 / (d - i)));
  }
  return m;
}

}  // namespace

RootBound cauchy_bound(const Polynomial& p) {
  const Polynomial q = p.trimmed();
  if (q.degree() < 1) throw InvalidInput("root bound needs degree >= 1");
  return {std::max(2.0 * ratio_max(q.coeffs()), kMinRadius)};
}

double homotopy_escape_radius(std::span<const Polynomial> samples) {
  if (samples.empty()) throw InvalidInput("escape radius needs at least one sample");
  const int d = samples.front().degree();
  if (d < 1) throw InvalidInput("escape radius needs degree >= 1");
  double m = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    if (s.degree() != d) throw InvalidInput("path samples disagree on degree");
    if (s.leading_negligible()) {
      throw PathConstructionError("leading coefficient vanishes at path sample " +
                                  std::to_string(k));
    }
    m = std::max(m, ratio_max(s.coeffs()));
  }
  return std::max(2.0 * m, kMinRadius);
}

}  // namespace rootpath
