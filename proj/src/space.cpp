#include "ineq/space.hpp"

#include <cmath>

namespace ineq {

namespace {

void check_pair(const Vector& x, const Vector& y) {
  if (x.tag() != y.tag())
    fail(ErrorCode::FieldMismatch, "vectors carry different field tags");
  if (x.dim() != y.dim())
    fail(ErrorCode::DimensionMismatch, "vectors have different dimensions");
}

}  // namespace

Cx inner(const Vector& x, const Vector& y) {
  check_pair(x, y);
  Cx acc(0.0, 0.0);
  for (std::size_t k = 0; k < x.dim(); ++k) acc += x[k] * std::conj(y[k]);
  return acc;
}

double norm(const Vector& x) {
  double acc = 0.0;
  for (const Cx& c : x.coords()) acc += std::norm(c);
  return std::sqrt(acc);
}

Cx complex_inner(const ComplexifiedVector& z, const ComplexifiedVector& w) {
  if (z.dim() != w.dim())
    fail(ErrorCode::DimensionMismatch, "complexified vectors have different dimensions");
  double ac = 0.0, bd = 0.0, bc = 0.0, ad = 0.0;
  for (std::size_t k = 0; k < z.dim(); ++k) {
    ac += z.a[k].real() * w.a[k].real();
    bd += z.b[k].real() * w.b[k].real();
    bc += z.b[k].real() * w.a[k].real();
    ad += z.a[k].real() * w.b[k].real();
  }
  return Cx(ac + bd, bc - ad);
}

double complexified_norm_sq(const ComplexifiedVector& z) {
  double na = norm(z.a), nb = norm(z.b);
  return na * na + nb * nb;
}

ComplexifiedVector conj_partner(const ComplexifiedVector& z) {
  return ComplexifiedVector(z.a, scale(Cx(-1.0, 0.0), z.b));
}

Vector add(const Vector& x, const Vector& y) {
  check_pair(x, y);
  Vector out = x;
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] += y[k];
  return out;
}

Vector sub(const Vector& x, const Vector& y) {
  check_pair(x, y);
  Vector out = x;
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] -= y[k];
  return out;
}

Vector scale(const Cx& s, const Vector& x) {
  if (x.tag() == FieldTag::Real && s.imag() != 0.0)
    fail(ErrorCode::FieldMismatch, "complex scalar applied to a REAL vector");
  Vector out = x;
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] *= s;
  return out;
}

Vector normalized(const Vector& x) {
  double n = norm(x);
  if (n == 0.0) fail(ErrorCode::NonAdmissible, "cannot normalize the zero vector");
  return scale(Cx(1.0 / n, 0.0), x);
}

bool is_unit(const Vector& e, double tol) {
  return std::abs(norm(e) - 1.0) <= tol;
}

}  // namespace ineq
