#pragma once

#include <cstddef>
#include <vector>

#include "sring/ring.hpp"

namespace sring {

/// Coefficients lowest degree first; trailing zeros are always stripped, so
/// the zero polynomial has no coefficients.
struct Polynomial {
  std::vector<Elem> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Elem> c) : coeffs(std::move(c)) { normalize(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Elem{0}; }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g);

/// Convolution f*g with f's coefficients on the left. Throws
/// SringError(DegreeOverflow) when deg f + deg g exceeds 2 * degree_bound.
Polynomial poly_multiply(const FiniteRing& ring, const Polynomial& f, const Polynomial& g,
                         std::size_t degree_bound);

}  // namespace sring
