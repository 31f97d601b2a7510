#include "sring/polynomial.hpp"

#include <algorithm>
#include <string>

namespace sring {

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  std::vector<Elem> out(std::max(f.coeffs.size(), g.coeffs.size()), ring.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.add(f.coeff(i), g.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial poly_multiply(const FiniteRing& ring, const Polynomial& f, const Polynomial& g,
                         std::size_t degree_bound) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto total = static_cast<std::size_t>(f.degree() + g.degree());
  if (total > 2 * degree_bound)
    throw SringError(ErrorKind::DegreeOverflow,
                     "product degree " + std::to_string(total) + " exceeds 2*" +
                         std::to_string(degree_bound));
  std::vector<Elem> out(total + 1, ring.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(f.coeffs[i], g.coeffs[j]));
  return Polynomial(std::move(out));
}

}  // namespace sring
