#include "ineq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<BoundInfo> kRegistry = {
    {BoundId::Kurepa, "KUREPA", Direction::Chain, TargetQuantity::Prod, false, true,
     "complexification refinement of the quadratic Schwarz inequality"},
    {BoundId::RefineSplit, "REFINE_SPLIT", Direction::Chain, TargetQuantity::Prod, false, true,
     "split refinement of the simple Schwarz inequality through a unit vector"},
    {BoundId::WeakRefine, "WEAK_REFINE", Direction::Lower, TargetQuantity::ReGap, false, false,
     "lower bound on the real gap from a distance/norm-difference sandwich"},
    {BoundId::AaQuad, "AA_QUAD", Direction::Chain, TargetQuantity::QuadGap, false, false,
     "two-scalar ball reverse for the quadratic form"},
    {BoundId::AaRatio, "AA_RATIO", Direction::Chain, TargetQuantity::Prod, false, false,
     "two-scalar ratio reverse for the simple form"},
    {BoundId::AaQuadratio, "AA_QUADRATIO", Direction::Upper, TargetQuantity::QuadGap, false, false,
     "two-scalar multiplicative reverse for the quadratic form"},
    {BoundId::AaSimple, "AA_SIMPLE", Direction::Chain, TargetQuantity::AbsGap, false, false,
     "two-scalar additive reverse for the simple form"},
    {BoundId::Angular, "ANGULAR", Direction::Upper, TargetQuantity::ReGap, false, false,
     "normalized-difference radius reverse (identity grade)"},
    {BoundId::AngularSuff, "ANGULAR_SUFF", Direction::Upper, TargetQuantity::ReGap, false, false,
     "sufficient raw-distance condition for the normalized-difference reverse"},
    {BoundId::Dw, "DW", Direction::Upper, TargetQuantity::ReGap, false, true,
     "Dunkl-Williams based reverse of the real gap"},
    {BoundId::Crossnorm, "CROSSNORM", Direction::Chain, TargetQuantity::AbsGap, false, false,
     "cross-normalized difference reverse"},
    {BoundId::HileV, "HILE_V", Direction::Upper, TargetQuantity::Prod, false, true,
     "Hile power-difference inequality"},
    {BoundId::Hile, "HILE", Direction::Upper, TargetQuantity::ReGap, false, true,
     "unconditional reverse from the v=1 Hile inequality"},
    {BoundId::GrcRaw, "GRC_RAW", Direction::Upper, TargetQuantity::Prod, false, false,
     "Goldstein-Ryff-Clarke power inequality, raw form"},
    {BoundId::Grc, "GRC", Direction::Chain, TargetQuantity::AbsGap, false, false,
     "Goldstein-Ryff-Clarke reverse of the simple form"},
    {BoundId::Proj, "PROJ", Direction::Upper, TargetQuantity::QuadGap, false, false,
     "projection-residual radius reverse (identity grade)"},
    {BoundId::ProjSuff, "PROJ_SUFF", Direction::Upper, TargetQuantity::QuadGap, false, false,
     "sufficient raw-distance condition for the projection reverse"},
    {BoundId::Phase, "PHASE", Direction::Upper, TargetQuantity::AbsGap, false, false,
     "phase-aligned difference reverse of the modulus gap"},
    {BoundId::ComplexAlpha, "COMPLEX_ALPHA", Direction::Chain, TargetQuantity::AbsGap, true, false,
     "complex-scalar slope reverse"},
    {BoundId::AlphaRot, "ALPHA_ROT", Direction::Chain, TargetQuantity::AbsGap, false, true,
     "rotation reverse with three-branch majorant menu"},
    {BoundId::LambdaInterp, "LAMBDA_INTERP", Direction::Upper, TargetQuantity::KernelRe, false, true,
     "interpolated kernel reverse with best constant 1/4"},
    {BoundId::PowerP, "POWER_P", Direction::Chain, TargetQuantity::ReGap, false, true,
     "power-mean reverse with two branches"},
    {BoundId::GammaBandUp, "GAMMA_BAND_UP", Direction::Upper, TargetQuantity::EQuadGap, false, false,
     "corner-scalar upper bound on the Bessel gap plus midpoint distance"},
    {BoundId::GammaBandLow, "GAMMA_BAND_LOW", Direction::Lower, TargetQuantity::EQuadGap, false, false,
     "corner-scalar lower bound on the Bessel gap plus midpoint distance"},
    {BoundId::GammaDisc, "GAMMA_DISC", Direction::Chain, TargetQuantity::EQuadGap, false, false,
     "disc reverse of the quadratic Schwarz inequality"},
    {BoundId::GammaDiscProduct, "GAMMA_DISC_PRODUCT", Direction::Upper, TargetQuantity::EQuadGap,
     false, false, "product-form disc reverse"},
    {BoundId::BetaCone, "BETA_CONE", Direction::Chain, TargetQuantity::Prod, false, false,
     "three-scalar cone reverse with ratio and quadratic conclusions"},
    {BoundId::TrigCone, "TRIG_CONE", Direction::Upper, TargetQuantity::Prod, true, false,
     "trigonometric cone reverse"},
};

double sqr(double t) { return t * t; }

double dist(const Vector& x, const Vector& y) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += std::norm(x[k] - y[k]);
  return std::sqrt(acc);
}

// ||x - s*y|| without tag ceremony (validation guarantees s is real on REAL).
double dist_scaled(const Vector& x, Cx s, const Vector& y) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += std::norm(x[k] - s * y[k]);
  return std::sqrt(acc);
}

double norm_comb(Cx sx, const Vector& x, Cx sy, const Vector& y) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += std::norm(sx * x[k] + sy * y[k]);
  return std::sqrt(acc);
}

Cx inner_comb_e(Cx sx, const Vector& x, Cx sy, const Vector& y, const Vector& e) {
  Cx acc(0.0, 0.0);
  for (std::size_t k = 0; k < x.dim(); ++k) acc += (sx * x[k] + sy * y[k]) * std::conj(e[k]);
  return acc;
}

void require_slot(const std::optional<Vector>& v, const char* slot) {
  if (!v) fail(ErrorCode::NonAdmissible, std::string("missing input vector '") + slot + "'");
}

void require_nonzero(const Vector& v, const char* slot) {
  if (v.is_zero())
    fail(ErrorCode::NonAdmissible, std::string("zero vector not admissible in slot '") + slot + "'");
}

void require_unit(const Vector& e) {
  if (!is_unit(e)) fail(ErrorCode::NonAdmissible, "'e' must be a unit vector (within 1e-12)");
}

void require_real_scalar(const std::optional<Cx>& s, const char* name, FieldTag field) {
  if (field == FieldTag::Real && s && s->imag() != 0.0)
    fail(ErrorCode::ParamDomain, std::string("param '") + name + "' must be real on a REAL space");
}

double require_param(const std::optional<double>& p, const char* name) {
  if (!p) fail(ErrorCode::ParamDomain, std::string("missing param '") + name + "'");
  return *p;
}

Cx require_param(const std::optional<Cx>& p, const char* name) {
  if (!p) fail(ErrorCode::ParamDomain, std::string("missing param '") + name + "'");
  return *p;
}

bool is_integer_exponent(double v) { return std::abs(v - std::llround(v)) <= 1e-12; }

// Shared slot layout checks: which vectors a bound consumes and their joint
// field/dimension consistency.
struct Slots {
  const Vector* x = nullptr;
  const Vector* y = nullptr;
  const Vector* e = nullptr;
  const ComplexifiedVector* z = nullptr;
  FieldTag field = FieldTag::Real;
};

Slots gather(BoundId id, const Inputs& in) {
  Slots s;
  auto need_x = [&] { require_slot(in.x, "x"); s.x = &*in.x; };
  auto need_y = [&] { require_slot(in.y, "y"); s.y = &*in.y; };
  auto need_e = [&] { require_slot(in.e, "e"); s.e = &*in.e; };
  switch (id) {
    case BoundId::Kurepa:
      if (!in.z) fail(ErrorCode::NonAdmissible, "missing input vector 'z'");
      s.z = &*in.z;
      need_x();
      if (s.x->tag() != FieldTag::Real)
        fail(ErrorCode::FieldMismatch, "'x' must be REAL for KUREPA");
      if (s.x->dim() != s.z->dim())
        fail(ErrorCode::DimensionMismatch, "'x' and 'z' must share dimension");
      s.field = FieldTag::Real;
      return s;
    case BoundId::RefineSplit:
    case BoundId::LambdaInterp:
      need_x();
      need_y();
      need_e();
      break;
    case BoundId::GammaBandUp:
    case BoundId::GammaBandLow:
    case BoundId::GammaDisc:
    case BoundId::GammaDiscProduct:
      need_x();
      need_e();
      break;
    default:
      need_x();
      need_y();
      break;
  }
  const Vector* ref = s.x;
  for (const Vector* v : {s.y, s.e}) {
    if (!v) continue;
    if (v->tag() != ref->tag()) fail(ErrorCode::FieldMismatch, "input vectors mix field tags");
    if (v->dim() != ref->dim()) fail(ErrorCode::DimensionMismatch, "input vectors mix dimensions");
  }
  s.field = ref->tag();
  return s;
}

void check_admissible(BoundId id, const Slots& s) {
  switch (id) {
    case BoundId::Angular:
    case BoundId::AngularSuff:
    case BoundId::Dw:
    case BoundId::Crossnorm:
    case BoundId::Hile:
      require_nonzero(*s.x, "x");
      require_nonzero(*s.y, "y");
      break;
    case BoundId::GrcRaw:
    case BoundId::Grc:
      require_nonzero(*s.x, "x");
      require_nonzero(*s.y, "y");
      break;
    case BoundId::Proj:
    case BoundId::ProjSuff:
      require_nonzero(*s.y, "y");
      break;
    case BoundId::Phase:
      if (std::abs(inner(*s.x, *s.y)) == 0.0)
        fail(ErrorCode::NonAdmissible, "'<x,y>' must be nonzero for PHASE");
      break;
    case BoundId::BetaCone:
    case BoundId::TrigCone:
      require_nonzero(*s.y, "y");
      break;
    case BoundId::RefineSplit:
    case BoundId::LambdaInterp:
    case BoundId::GammaBandUp:
    case BoundId::GammaBandLow:
    case BoundId::GammaDisc:
    case BoundId::GammaDiscProduct:
      require_unit(*s.e);
      break;
    default:
      break;
  }
  if ((id == BoundId::ComplexAlpha || id == BoundId::TrigCone) && s.field != FieldTag::Complex)
    fail(ErrorCode::NonAdmissible, "bound requires a COMPLEX space");
}

HypothesisCheck hypothesis_impl(BoundId id, const Slots& s, const BoundParams& p) {
  auto cond = [](double slack) { return HypothesisCheck{slack >= 0.0, slack}; };
  switch (id) {
    case BoundId::Kurepa:
    case BoundId::RefineSplit:
    case BoundId::Hile:
    case BoundId::AlphaRot:
    case BoundId::LambdaInterp:
    case BoundId::PowerP:
    case BoundId::HileV:
      return {true, kInf};
    case BoundId::WeakRefine: {
      double d = dist(*s.x, *s.y);
      double t = std::abs(norm(*s.x) - norm(*s.y));
      return cond(std::min(d - *p.r2, *p.r1 - t));
    }
    case BoundId::AaQuad:
    case BoundId::AaRatio:
    case BoundId::AaQuadratio:
    case BoundId::AaSimple: {
      Cx m = (*p.cap_a + *p.low_a) / 2.0;
      double radius = 0.5 * std::abs(*p.cap_a - *p.low_a) * norm(*s.y);
      return cond(radius - dist_scaled(*s.x, m, *s.y));
    }
    case BoundId::Angular: {
      double nx = norm(*s.x), ny = norm(*s.y);
      return cond(*p.r - norm_comb(Cx(1.0 / nx, 0), *s.x, Cx(-1.0 / ny, 0), *s.y));
    }
    case BoundId::AngularSuff:
      return cond(0.5 * *p.r * norm(*s.x) - dist(*s.x, *s.y));
    case BoundId::Dw: {
      if (!p.eta) return {true, kInf};
      return cond(*p.eta * (norm(*s.x) + norm(*s.y)) - dist(*s.x, *s.y));
    }
    case BoundId::Crossnorm: {
      double nx = norm(*s.x), ny = norm(*s.y);
      return cond(*p.rho - norm_comb(Cx(1.0 / ny, 0), *s.x, Cx(-1.0 / nx, 0), *s.y));
    }
    case BoundId::GrcRaw:
    case BoundId::Grc:
      return cond(norm(*s.x) - norm(*s.y));
    case BoundId::Proj: {
      Cx w = inner(*s.x, *s.y);
      double ny2 = sqr(norm(*s.y));
      return cond(*p.r - dist_scaled(*s.x, w / ny2, *s.y));
    }
    case BoundId::ProjSuff:
      return cond(0.5 * *p.r - dist(*s.x, *s.y));
    case BoundId::Phase: {
      Cx w = inner(*s.x, *s.y);
      return cond(*p.rho - dist_scaled(*s.x, w / std::abs(w), *s.y));
    }
    case BoundId::ComplexAlpha: {
      double k = p.alpha->imag() / p.alpha->real();
      return cond(*p.r - dist_scaled(*s.x, Cx(k, 0.0), *s.y));
    }
    case BoundId::GammaBandUp:
    case BoundId::GammaDisc:
    case BoundId::GammaDiscProduct: {
      Cx m = (*p.gamma + *p.cap_gamma) / 2.0;
      return cond(0.5 * std::abs(*p.cap_gamma - *p.gamma) - dist_scaled(*s.x, m, *s.e));
    }
    case BoundId::GammaBandLow: {
      Cx b = inner(*s.x, *s.e);
      Cx m = (*p.gamma + *p.cap_gamma) / 2.0;
      double slack = std::min(b.real() - p.gamma->real(), p.cap_gamma->real() - b.real());
      if (s.field == FieldTag::Complex) {
        slack = std::min(slack, b.imag() - p.gamma->imag());
        slack = std::min(slack, p.cap_gamma->imag() - b.imag());
      }
      double anti = dist_scaled(*s.x, m, *s.e) - 0.5 * std::abs(*p.cap_gamma - *p.gamma);
      return cond(std::min(slack, anti));
    }
    case BoundId::BetaCone: {
      double a = p.alpha->real(), g = p.gamma->real();
      double radius = std::sqrt(std::max(std::norm(*p.beta) - a * g, 0.0)) / a * norm(*s.y);
      return cond(radius - dist_scaled(*s.x, *p.beta / a, *s.y));
    }
    case BoundId::TrigCone: {
      Cx u(std::cos(*p.phi), std::sin(*p.phi));
      return cond(std::cos(*p.theta) * norm(*s.y) - dist_scaled(*s.x, u, *s.y));
    }
  }
  fail(ErrorCode::ParamDomain, "unknown bound id");
}

struct ChainLayout {
  // Consecutive links 0..monotone_prefix-1 are asserted (whole chain when
  // prefix < 0); extra pairs add non-consecutive assertions.
  int monotone_prefix = -1;
  std::vector<std::pair<int, int>> extra_links;
  bool ascending = true;
  int tight_num = 0;
  int tight_den = -1;  // -1: last element
};

ChainLayout chain_layout(BoundId id) {
  switch (id) {
    case BoundId::Kurepa:
      return {-1, {}, true, 0, 1};
    case BoundId::RefineSplit:
      return {-1, {}, false, 1, 0};
    case BoundId::Crossnorm:
    case BoundId::Grc:
    case BoundId::ComplexAlpha:
    case BoundId::PowerP:
      return {-1, {}, true, 1, 2};
    case BoundId::AlphaRot:
      return {-1, {}, true, 0, 3};
    case BoundId::BetaCone:
      return {3, {{3, 4}}, true, 0, 2};
    default:
      return {-1, {}, true, 0, -1};
  }
}

}  // namespace

const std::vector<BoundInfo>& registry() { return kRegistry; }

const BoundInfo& info(BoundId id) { return kRegistry[static_cast<std::size_t>(id)]; }

std::string_view to_string(BoundId id) { return info(id).name; }

std::string_view to_string(TargetQuantity q) {
  switch (q) {
    case TargetQuantity::ReGap: return "Q_RE_GAP";
    case TargetQuantity::AbsGap: return "Q_ABS_GAP";
    case TargetQuantity::QuadGap: return "Q_QUAD_GAP";
    case TargetQuantity::EQuadGap: return "Q_E_QUAD_GAP";
    case TargetQuantity::Prod: return "Q_PROD";
    case TargetQuantity::KernelRe: return "Q_KERNEL_RE";
  }
  return "UNKNOWN";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Upper: return "UPPER";
    case Direction::Lower: return "LOWER";
    case Direction::Chain: return "CHAIN";
  }
  return "UNKNOWN";
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (const BoundInfo& b : kRegistry)
    if (b.name == name) return b.id;
  return std::nullopt;
}

void validate_params(BoundId id, const BoundParams& p, FieldTag field) {
  switch (id) {
    case BoundId::Kurepa:
    case BoundId::RefineSplit:
    case BoundId::Hile:
      break;
    case BoundId::WeakRefine: {
      double r1 = require_param(p.r1, "r1");
      double r2 = require_param(p.r2, "r2");
      if (r1 < 0.0) fail(ErrorCode::ParamDomain, "param 'r1' must be >= 0");
      if (r2 < r1) fail(ErrorCode::ParamDomain, "param 'r2' must be >= r1");
      break;
    }
    case BoundId::AaQuad:
    case BoundId::AaRatio:
    case BoundId::AaQuadratio:
    case BoundId::AaSimple: {
      Cx A = require_param(p.cap_a, "A");
      Cx a = require_param(p.low_a, "a");
      require_real_scalar(p.cap_a, "A", field);
      require_real_scalar(p.low_a, "a", field);
      if ((id == BoundId::AaRatio || id == BoundId::AaQuadratio) &&
          (A * std::conj(a)).real() <= 0.0)
        fail(ErrorCode::ParamDomain, "params 'A','a' must satisfy Re(A*conj(a)) > 0");
      if (id == BoundId::AaSimple && std::abs(A + a) == 0.0)
        fail(ErrorCode::ParamDomain, "params must satisfy A != -a");
      break;
    }
    case BoundId::Angular:
    case BoundId::AngularSuff:
    case BoundId::Proj:
    case BoundId::ProjSuff:
      if (require_param(p.r, "r") <= 0.0) fail(ErrorCode::ParamDomain, "param 'r' must be > 0");
      break;
    case BoundId::Dw:
      if (p.eta && (*p.eta <= 0.0 || *p.eta > 1.0))
        fail(ErrorCode::ParamDomain, "param 'eta' must lie in (0,1]");
      break;
    case BoundId::Crossnorm:
    case BoundId::Phase:
      if (require_param(p.rho, "rho") <= 0.0)
        fail(ErrorCode::ParamDomain, "param 'rho' must be > 0");
      break;
    case BoundId::HileV:
      if (require_param(p.v, "v") <= 0.0) fail(ErrorCode::ParamDomain, "param 'v' must be > 0");
      break;
    case BoundId::GrcRaw:
    case BoundId::Grc:
      require_param(p.r, "r");
      break;
    case BoundId::ComplexAlpha: {
      Cx a = require_param(p.alpha, "alpha");
      if (a.real() <= 0.0 || a.imag() <= 0.0)
        fail(ErrorCode::ParamDomain, "param 'alpha' must have Re > 0 and Im > 0");
      if (require_param(p.r, "r") <= 0.0) fail(ErrorCode::ParamDomain, "param 'r' must be > 0");
      break;
    }
    case BoundId::AlphaRot: {
      Cx a = require_param(p.alpha, "alpha");
      require_real_scalar(p.alpha, "alpha", field);
      if (std::abs(a) == 0.0) fail(ErrorCode::ParamDomain, "param 'alpha' must be nonzero");
      if (p.p && *p.p <= 1.0) fail(ErrorCode::ParamDomain, "param 'p' must be > 1");
      break;
    }
    case BoundId::LambdaInterp: {
      double l = require_param(p.lambda, "lambda");
      if (l <= 0.0 || l >= 1.0) fail(ErrorCode::ParamDomain, "param 'lambda' must lie in (0,1)");
      break;
    }
    case BoundId::PowerP:
      if (p.p && *p.p < 1.0) fail(ErrorCode::ParamDomain, "param 'p' must be >= 1");
      break;
    case BoundId::GammaBandUp:
    case BoundId::GammaBandLow:
    case BoundId::GammaDisc:
    case BoundId::GammaDiscProduct:
      require_param(p.gamma, "gamma");
      require_param(p.cap_gamma, "Gamma");
      require_real_scalar(p.gamma, "gamma", field);
      require_real_scalar(p.cap_gamma, "Gamma", field);
      break;
    case BoundId::BetaCone: {
      Cx al = require_param(p.alpha, "alpha");
      Cx g = require_param(p.gamma, "gamma");
      Cx b = require_param(p.beta, "beta");
      if (al.imag() != 0.0 || al.real() <= 0.0)
        fail(ErrorCode::ParamDomain, "param 'alpha' must be a positive real");
      if (g.imag() != 0.0 || g.real() <= 0.0)
        fail(ErrorCode::ParamDomain, "param 'gamma' must be a positive real");
      require_real_scalar(p.beta, "beta", field);
      if (std::norm(b) < al.real() * g.real())
        fail(ErrorCode::ParamDomain, "params must satisfy |beta|^2 >= alpha*gamma");
      break;
    }
    case BoundId::TrigCone: {
      double phi = require_param(p.phi, "phi");
      double theta = require_param(p.theta, "theta");
      constexpr double pi = 3.14159265358979323846;
      if (phi < 0.0 || phi >= 2.0 * pi)
        fail(ErrorCode::ParamDomain, "param 'phi' must lie in [0, 2*pi)");
      if (theta <= 0.0 || theta >= pi / 2.0)
        fail(ErrorCode::ParamDomain, "param 'theta' must lie in (0, pi/2)");
      break;
    }
  }
}

HypothesisCheck check_hypothesis(BoundId id, const Inputs& in, const BoundParams& params) {
  Slots s = gather(id, in);
  validate_params(id, params, s.field);
  check_admissible(id, s);
  return hypothesis_impl(id, s, params);
}

double quantity(TargetQuantity kind, const Vector& x, const Vector& y_or_e) {
  switch (kind) {
    case TargetQuantity::ReGap:
      return norm(x) * norm(y_or_e) - inner(x, y_or_e).real();
    case TargetQuantity::AbsGap:
      return norm(x) * norm(y_or_e) - std::abs(inner(x, y_or_e));
    case TargetQuantity::QuadGap:
      return sqr(norm(x)) * sqr(norm(y_or_e)) - std::norm(inner(x, y_or_e));
    case TargetQuantity::EQuadGap:
      require_unit(y_or_e);
      return sqr(norm(x)) - std::norm(inner(x, y_or_e));
    case TargetQuantity::Prod:
      return norm(x) * norm(y_or_e);
    case TargetQuantity::KernelRe:
      fail(ErrorCode::NonAdmissible, "Q_KERNEL_RE needs the three-vector overload (x, y, e)");
  }
  fail(ErrorCode::ParamDomain, "unknown quantity kind");
}

double quantity(TargetQuantity kind, const Vector& x, const Vector& y, const Vector& e) {
  if (kind != TargetQuantity::KernelRe) return quantity(kind, x, y);
  require_unit(e);
  Cx w = inner(x, y);
  return (w - inner(x, e) * inner(e, y)).real();
}

double link_margin(double lhs, double rhs) {
  double s = 1.0;
  if (std::abs(lhs) > s) s = std::abs(lhs);
  if (std::abs(rhs) > s) s = std::abs(rhs);
  return (rhs - lhs) / s;
}

double report_margin(const BoundReport& rep) {
  if (rep.direction == Direction::Upper) return link_margin(rep.lhs, rep.rhs);
  if (rep.direction == Direction::Lower) return link_margin(rep.rhs, rep.lhs);
  const std::vector<double>& v = *rep.chain_values;
  ChainLayout lay = chain_layout(rep.bound_id);
  int prefix = lay.monotone_prefix < 0 ? static_cast<int>(v.size()) : lay.monotone_prefix;
  double worst = kInf;
  for (int i = 0; i + 1 < prefix; ++i) {
    double m = lay.ascending ? link_margin(v[i], v[i + 1]) : link_margin(v[i + 1], v[i]);
    worst = std::min(worst, m);
  }
  for (auto [l, r] : lay.extra_links) worst = std::min(worst, link_margin(v[l], v[r]));
  return worst;
}

BoundReport evaluate(BoundId id, const Inputs& in, const BoundParams& p, const EvalOptions& opt) {
  Slots s = gather(id, in);
  validate_params(id, p, s.field);
  check_admissible(id, s);
  HypothesisCheck hc = hypothesis_impl(id, s, p);

  BoundReport rep;
  rep.bound_id = id;
  rep.applicable = hc.applicable;
  rep.hypothesis_slack = hc.slack;
  rep.direction = info(id).direction;

  std::vector<double> chain;

  switch (id) {
    case BoundId::Kurepa: {
      const ComplexifiedVector& z = *s.z;
      ComplexifiedVector a_lift(*s.x, Vector::zero(FieldTag::Real, s.x->dim()));
      double first = std::norm(complex_inner(z, a_lift));
      double na2 = sqr(norm(*s.x));
      double mid = 0.5 * na2 * (complexified_norm_sq(z) + std::abs(complex_inner(z, conj_partner(z))));
      double last = na2 * complexified_norm_sq(z);
      chain = {first, mid, last};
      break;
    }
    case BoundId::RefineSplit: {
      Cx w = inner(*s.x, *s.y);
      Cx split = inner(*s.x, *s.e) * inner(*s.e, *s.y);
      chain = {norm(*s.x) * norm(*s.y), std::abs(w - split) + std::abs(split), std::abs(w)};
      break;
    }
    case BoundId::WeakRefine: {
      rep.lhs = quantity(TargetQuantity::ReGap, *s.x, *s.y);
      rep.rhs = 0.5 * (sqr(*p.r2) - sqr(*p.r1));
      break;
    }
    case BoundId::AaQuad: {
      Cx A = *p.cap_a, a = *p.low_a;
      Cx m = (A + a) / 2.0;
      double ny = norm(*s.y), ny2 = sqr(ny);
      Cx w = inner(*s.x, *s.y);
      double final_term = 0.25 * std::norm(A - a) * sqr(ny2);
      double b1 = final_term - std::norm(m * ny2 - w);
      // Re<Ay-x, x-ay> expanded through the midpoint identity.
      double re_form = 0.25 * std::norm(A - a) * ny2 - sqr(dist_scaled(*s.x, m, *s.y));
      double b2 = final_term - ny2 * re_form;
      chain = {quantity(TargetQuantity::QuadGap, *s.x, *s.y), std::min(b1, b2), std::max(b1, b2),
               final_term};
      break;
    }
    case BoundId::AaRatio: {
      Cx A = *p.cap_a, a = *p.low_a;
      Cx w = inner(*s.x, *s.y);
      double root = std::sqrt((A * std::conj(a)).real());
      double mid = 0.5 * ((std::conj(A) + std::conj(a)) * w).real() / root;
      double last = 0.5 * std::abs(A + a) * std::abs(w) / root;
      chain = {norm(*s.x) * norm(*s.y), mid, last};
      break;
    }
    case BoundId::AaQuadratio: {
      Cx A = *p.cap_a, a = *p.low_a;
      Cx w = inner(*s.x, *s.y);
      rep.lhs = quantity(TargetQuantity::QuadGap, *s.x, *s.y);
      rep.rhs = 0.25 * std::norm(A - a) / (A * std::conj(a)).real() * std::norm(w);
      break;
    }
    case BoundId::AaSimple: {
      Cx A = *p.cap_a, a = *p.low_a;
      Cx u = (std::conj(A) + std::conj(a)) / std::abs(A + a);
      Cx w = inner(*s.x, *s.y);
      double prod = norm(*s.x) * norm(*s.y);
      double re_u = (u * w).real();
      double last = 0.25 * std::norm(A - a) * sqr(norm(*s.y)) / std::abs(A + a);
      chain = {prod - std::abs(w), prod - std::abs(re_u), prod - re_u, last};
      break;
    }
    case BoundId::Angular:
    case BoundId::AngularSuff: {
      rep.lhs = quantity(TargetQuantity::ReGap, *s.x, *s.y);
      rep.rhs = 0.5 * sqr(*p.r) * norm(*s.x) * norm(*s.y);
      break;
    }
    case BoundId::Dw: {
      double nx = norm(*s.x), ny = norm(*s.y);
      rep.lhs = quantity(TargetQuantity::ReGap, *s.x, *s.y);
      if (p.eta) {
        rep.rhs = 2.0 * sqr(*p.eta) * nx * ny;
      } else {
        rep.rhs = 2.0 * sqr(dist(*s.x, *s.y) / (nx + ny)) * nx * ny;
      }
      break;
    }
    case BoundId::Crossnorm: {
      chain = {quantity(TargetQuantity::AbsGap, *s.x, *s.y),
               quantity(TargetQuantity::ReGap, *s.x, *s.y),
               0.5 * sqr(*p.rho) * norm(*s.x) * norm(*s.y)};
      break;
    }
    case BoundId::HileV: {
      double v = *p.v;
      double nx = norm(*s.x), ny = norm(*s.y);
      if (!is_integer_exponent(v) && std::abs(nx - ny) < 1e-8)
        fail(ErrorCode::NonAdmissible,
             "non-integer 'v' needs ||x|| != ||y|| (difference >= 1e-8)");
      double quotient;
      if (is_integer_exponent(v)) {
        // Power sum removes the singularity exactly.
        long long n = std::llround(v);
        quotient = 0.0;
        for (long long k = 0; k <= n; ++k)
          quotient += std::pow(nx, static_cast<double>(k)) * std::pow(ny, static_cast<double>(n - k));
      } else {
        quotient = (std::pow(nx, v + 1.0) - std::pow(ny, v + 1.0)) / (nx - ny);
      }
      rep.lhs = norm_comb(Cx(std::pow(nx, v), 0), *s.x, Cx(-std::pow(ny, v), 0), *s.y);
      rep.rhs = quotient * dist(*s.x, *s.y);
      break;
    }
    case BoundId::Hile: {
      double nx = norm(*s.x), ny = norm(*s.y);
      rep.lhs = quantity(TargetQuantity::ReGap, *s.x, *s.y);
      rep.rhs = 0.5 * sqr(nx + ny) * sqr(dist(*s.x, *s.y)) / (nx * ny);
      break;
    }
    case BoundId::GrcRaw: {
      double r = *p.r;
      double nx = norm(*s.x), ny = norm(*s.y);
      double d2 = sqr(dist(*s.x, *s.y));
      rep.lhs = std::pow(nx, 2.0 * r) + std::pow(ny, 2.0 * r) -
                2.0 * std::pow(nx, r) * std::pow(ny, r) * inner(*s.x, *s.y).real() / (nx * ny);
      rep.rhs = r >= 1.0 ? sqr(r) * std::pow(nx, 2.0 * r - 2.0) * d2
                         : std::pow(ny, 2.0 * r - 2.0) * d2;
      break;
    }
    case BoundId::Grc: {
      double r = *p.r;
      double nx = norm(*s.x), ny = norm(*s.y);
      double d2 = sqr(dist(*s.x, *s.y));
      double branch = r >= 1.0 ? 0.5 * sqr(r) * std::pow(nx / ny, r - 1.0) * d2
                               : 0.5 * std::pow(nx / ny, 1.0 - r) * d2;
      chain = {quantity(TargetQuantity::AbsGap, *s.x, *s.y),
               quantity(TargetQuantity::ReGap, *s.x, *s.y), branch};
      break;
    }
    case BoundId::Proj:
    case BoundId::ProjSuff: {
      rep.lhs = quantity(TargetQuantity::QuadGap, *s.x, *s.y);
      rep.rhs = sqr(*p.r) * sqr(norm(*s.y));
      break;
    }
    case BoundId::Phase: {
      rep.lhs = quantity(TargetQuantity::AbsGap, *s.x, *s.y);
      rep.rhs = 0.5 * sqr(*p.rho);
      break;
    }
    case BoundId::ComplexAlpha: {
      chain = {quantity(TargetQuantity::AbsGap, *s.x, *s.y),
               quantity(TargetQuantity::ReGap, *s.x, *s.y),
               0.5 * (p.alpha->real() / p.alpha->imag()) * sqr(*p.r)};
      break;
    }
    case BoundId::AlphaRot: {
      Cx al = *p.alpha;
      double aa = std::abs(al);
      double are = std::abs(al.real()), aim = std::abs(al.imag());
      double dm = dist(*s.x, *s.y);
      double dp = norm_comb(Cx(1, 0), *s.x, Cx(1, 0), *s.y);
      double pp = p.p.value_or(2.0);
      double qq = pp / (pp - 1.0);
      Cx w = inner(*s.x, *s.y);
      double t2 = norm(*s.x) * norm(*s.y) - ((al * al) / std::norm(al) * w).real();
      double spread = are * dm + aim * dp;
      double t3 = 0.5 * sqr(spread / aa);
      // Branch menu for the majorant, each normalized by |alpha| so the chain
      // stays scale-invariant in alpha.
      double i1 = std::max(are, aim) * (dm + dp);
      double i2 = std::pow(std::pow(are, pp) + std::pow(aim, pp), 1.0 / pp) *
                  std::pow(std::pow(dm, qq) + std::pow(dp, qq), 1.0 / qq);
      double i3 = std::max(dm, dp) * (are + aim);
      std::vector<double> menu = {0.5 * sqr(i1 / aa), 0.5 * sqr(i2 / aa), 0.5 * sqr(i3 / aa)};
      std::sort(menu.begin(), menu.end());
      chain = {quantity(TargetQuantity::AbsGap, *s.x, *s.y), t2, t3, menu[0], menu[1], menu[2]};
      break;
    }
    case BoundId::LambdaInterp: {
      double l = *p.lambda;
      rep.lhs = quantity(TargetQuantity::KernelRe, *s.x, *s.y, *s.e);
      double comb_norm = norm_comb(Cx(l, 0), *s.x, Cx(1.0 - l, 0), *s.y);
      Cx comb_e = inner_comb_e(Cx(l, 0), *s.x, Cx(1.0 - l, 0), *s.y, *s.e);
      rep.rhs = 0.25 / (l * (1.0 - l)) * (sqr(comb_norm) - std::norm(comb_e));
      break;
    }
    case BoundId::PowerP: {
      double pp = p.p.value_or(2.0);
      double nx = norm(*s.x), ny = norm(*s.y);
      double b1 = std::pow(nx + ny, 2.0 * pp) -
                  std::pow(norm_comb(Cx(1, 0), *s.x, Cx(1, 0), *s.y), 2.0 * pp);
      double b2 = std::pow(dist(*s.x, *s.y), 2.0 * pp) - std::pow(std::abs(nx - ny), 2.0 * pp);
      // Cancellation can push the brackets a hair below zero near equality.
      b1 = std::pow(std::max(b1, 0.0), 1.0 / pp);
      b2 = std::pow(std::max(b2, 0.0), 1.0 / pp);
      chain = {quantity(TargetQuantity::AbsGap, *s.x, *s.y),
               quantity(TargetQuantity::ReGap, *s.x, *s.y), 0.5 * std::min(b1, b2),
               0.5 * std::max(b1, b2)};
      break;
    }
    case BoundId::GammaBandUp:
    case BoundId::GammaBandLow: {
      Cx m = (*p.gamma + *p.cap_gamma) / 2.0;
      double gap = quantity(TargetQuantity::EQuadGap, *s.x, *s.e);
      rep.lhs = gap + sqr(dist_scaled(*s.x, m, *s.e));
      double corner = std::norm(*p.cap_gamma - *p.gamma);
      rep.rhs = (id == BoundId::GammaBandUp ? 0.5 : 0.25) * corner;
      break;
    }
    case BoundId::GammaDisc: {
      Cx b = inner(*s.x, *s.e);
      Cx g = *p.gamma, G = *p.cap_gamma;
      double mid = (G.real() - b.real()) * (b.real() - g.real()) +
                   (G.imag() - b.imag()) * (b.imag() - g.imag());
      chain = {quantity(TargetQuantity::EQuadGap, *s.x, *s.e), mid, 0.25 * std::norm(G - g)};
      break;
    }
    case BoundId::GammaDiscProduct: {
      Cx b = inner(*s.x, *s.e);
      rep.lhs = quantity(TargetQuantity::EQuadGap, *s.x, *s.e);
      rep.rhs = std::abs(*p.cap_gamma - b) * std::abs(b - *p.gamma);
      break;
    }
    case BoundId::BetaCone: {
      double a = p.alpha->real(), g = p.gamma->real();
      Cx beta = *p.beta;
      Cx w = inner(*s.x, *s.y);
      double root = std::sqrt(a * g);
      double prod = norm(*s.x) * norm(*s.y);
      double mid = (beta.real() * w.real() + beta.imag() * w.imag()) / root;
      double last = std::abs(beta) * std::abs(w) / root;
      double quad_gap = quantity(TargetQuantity::QuadGap, *s.x, *s.y);
      double quad_bound = (std::norm(beta) - a * g) / (a * g) * std::norm(w);
      chain = {prod, mid, last, quad_gap, quad_bound};
      break;
    }
    case BoundId::TrigCone: {
      Cx w = inner(*s.x, *s.y);
      rep.lhs = norm(*s.x) * norm(*s.y);
      rep.rhs = (std::cos(*p.phi) * w.real() + std::sin(*p.phi) * w.imag()) / std::sin(*p.theta);
      break;
    }
  }

  ChainLayout lay = chain_layout(id);
  if (!chain.empty()) {
    if (lay.tight_den < 0) lay.tight_den = static_cast<int>(chain.size()) - 1;
    rep.lhs = chain.front();
    // rhs: the bound the chain certifies for the lhs.  Ascending chains end in
    // it; the descending refinement reports its strongest (second) element.
    rep.rhs = lay.ascending ? chain.back() : chain[1];
    if (id == BoundId::BetaCone) rep.rhs = chain[2];
    if (id == BoundId::PowerP || id == BoundId::AlphaRot) rep.rhs = chain[lay.tight_den];
    rep.chain_values = chain;
  }

  if (rep.applicable) {
    if (!chain.empty()) {
      double m = report_margin(rep);
      rep.satisfied = m >= -opt.tolerance;
      double num = chain[lay.tight_num];
      double den = chain[lay.tight_den];
      if (den > 0.0) rep.tightness = num / den;
    } else if (rep.direction == Direction::Upper) {
      rep.satisfied = leq_tol(rep.lhs, rep.rhs, opt.tolerance);
      if (rep.rhs > 0.0) rep.tightness = rep.lhs / rep.rhs;
    } else {
      rep.satisfied = leq_tol(rep.rhs, rep.lhs, opt.tolerance);
      if (rep.lhs > 0.0) rep.tightness = rep.rhs / rep.lhs;
    }
  }
  return rep;
}

}  // namespace ineq
