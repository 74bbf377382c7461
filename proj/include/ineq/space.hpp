#ifndef INEQ_SPACE_HPP
#define INEQ_SPACE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ineq/error.hpp"

namespace ineq {

using Cx = std::complex<double>;

enum class FieldTag { Real, Complex };

inline const char* to_string(FieldTag t) noexcept {
  return t == FieldTag::Real ? "REAL" : "COMPLEX";
}

/// Dense coordinate vector over a declared scalar field.  Coordinates are
/// stored as complex doubles; under the Real tag every imaginary part is
/// exactly zero (enforced at construction).
class Vector {
 public:
  Vector() = default;

  static Vector real(std::vector<double> coords) {
    Vector v;
    v.tag_ = FieldTag::Real;
    if (coords.empty()) fail(ErrorCode::NonAdmissible, "vector must have dim >= 1");
    v.coords_.reserve(coords.size());
    for (double c : coords) v.coords_.emplace_back(c, 0.0);
    return v;
  }

  static Vector real(std::initializer_list<double> coords) {
    return real(std::vector<double>(coords));
  }

  static Vector complex(std::vector<Cx> coords) {
    Vector v;
    v.tag_ = FieldTag::Complex;
    if (coords.empty()) fail(ErrorCode::NonAdmissible, "vector must have dim >= 1");
    v.coords_ = std::move(coords);
    return v;
  }

  static Vector complex(std::initializer_list<Cx> coords) {
    return complex(std::vector<Cx>(coords));
  }

  static Vector zero(FieldTag tag, std::size_t dim) {
    if (dim == 0) fail(ErrorCode::NonAdmissible, "vector must have dim >= 1");
    Vector v;
    v.tag_ = tag;
    v.coords_.assign(dim, Cx(0.0, 0.0));
    return v;
  }

  FieldTag tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Cx>& coords() const noexcept { return coords_; }
  std::vector<Cx>& coords() noexcept { return coords_; }
  const Cx& operator[](std::size_t i) const { return coords_[i]; }
  Cx& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept {
    for (const Cx& c : coords_)
      if (c.real() != 0.0 || c.imag() != 0.0) return false;
    return true;
  }

 private:
  FieldTag tag_ = FieldTag::Real;
  std::vector<Cx> coords_;
};

/// z = a + i b with a, b real vectors of equal dimension; the standard
/// complexification of a real inner product space.
struct ComplexifiedVector {
  Vector a;
  Vector b;

  ComplexifiedVector() = default;
  ComplexifiedVector(Vector a_, Vector b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.tag() != FieldTag::Real || b.tag() != FieldTag::Real)
      fail(ErrorCode::FieldMismatch, "complexified vector parts must be REAL");
    if (a.dim() != b.dim())
      fail(ErrorCode::DimensionMismatch, "complexified vector parts must share dim");
  }

  std::size_t dim() const noexcept { return a.dim(); }
};

// Inner product: linear in the first argument, conjugate-linear in the second.
Cx inner(const Vector& x, const Vector& y);

double norm(const Vector& x);

// <z,w> on the complexification; with z = a+ib, w = c+id this equals
// <a,c>+<b,d> + i(<b,c>-<a,d>).
Cx complex_inner(const ComplexifiedVector& z, const ComplexifiedVector& w);

// ||z||^2 = ||a||^2 + ||b||^2.
double complexified_norm_sq(const ComplexifiedVector& z);

// z-bar = a - ib; an involution.
ComplexifiedVector conj_partner(const ComplexifiedVector& z);

// Elementwise arithmetic.  Scaling a REAL vector by a scalar with nonzero
// imaginary part is a field mismatch.
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Cx& s, const Vector& x);

/// Returns x normalized to unit norm; rejects the zero vector.
Vector normalized(const Vector& x);

/// True when | ||e|| - 1 | <= tol (the unit-vector admissibility check).
bool is_unit(const Vector& e, double tol = 1e-12);

}  // namespace ineq

#endif
