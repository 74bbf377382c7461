#ifndef INEQ_BOUNDS_HPP
#define INEQ_BOUNDS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "ineq/space.hpp"

namespace ineq {

/// Scalar quantities the catalog bounds from above or below.
enum class TargetQuantity {
  ReGap,     // ||x|| ||y|| - Re<x,y>
  AbsGap,    // ||x|| ||y|| - |<x,y>|
  QuadGap,   // ||x||^2 ||y||^2 - |<x,y>|^2
  EQuadGap,  // ||x||^2 - |<x,e>|^2 for unit e
  Prod,      // ||x|| ||y||
  KernelRe,  // Re[<x,y> - <x,e><e,y>] for unit e
};

enum class Direction { Upper, Lower, Chain };

/// One inequality per identifier.  Inputs ride in named slots: most bounds use
/// x and y; vector-vs-reference bounds (BetaCone, TrigCone) put the reference
/// vector in y; the e slot carries the unit vector where one is required;
/// Kurepa takes a complexified z plus a REAL vector in x.
enum class BoundId {
  Kurepa,
  RefineSplit,
  WeakRefine,
  AaQuad,
  AaRatio,
  AaQuadratio,
  AaSimple,
  Angular,
  AngularSuff,
  Dw,
  Crossnorm,
  HileV,
  Hile,
  GrcRaw,
  Grc,
  Proj,
  ProjSuff,
  Phase,
  ComplexAlpha,
  AlphaRot,
  LambdaInterp,
  PowerP,
  GammaBandUp,
  GammaBandLow,
  GammaDisc,
  GammaDiscProduct,
  BetaCone,
  TrigCone,
};

/// Scalar parameters, keyed by bound.  Domain constraints are validated per
/// bound by validate_params.
struct BoundParams {
  std::optional<double> r;       // radius (Angular, AngularSuff, Proj, ProjSuff, ComplexAlpha)
  std::optional<double> rho;     // radius (Crossnorm, Phase)
  std::optional<double> eta;     // Dw relative-radius form, in (0,1]
  std::optional<double> v;       // HileV exponent, > 0
  std::optional<double> lambda;  // LambdaInterp interpolation weight, in (0,1)
  std::optional<double> p;       // power/Hoelder exponent
  std::optional<double> r1;      // WeakRefine inner radius, >= 0
  std::optional<double> r2;      // WeakRefine outer radius, >= r1
  std::optional<double> phi;     // TrigCone rotation angle, in [0, 2*pi)
  std::optional<double> theta;   // TrigCone aperture, in (0, pi/2)
  std::optional<Cx> cap_a;       // A in the Aa* family
  std::optional<Cx> low_a;       // a in the Aa* family
  std::optional<Cx> alpha;       // ComplexAlpha / AlphaRot scalar; BetaCone positive real
  std::optional<Cx> beta;        // BetaCone scalar
  std::optional<Cx> gamma;       // lower corner scalar (Gamma* family); BetaCone positive real
  std::optional<Cx> cap_gamma;   // upper corner scalar (Gamma* family)
};

struct Inputs {
  std::optional<Vector> x;
  std::optional<Vector> y;
  std::optional<Vector> e;
  std::optional<ComplexifiedVector> z;
};

struct EvalOptions {
  double tolerance = 1e-9;  // L <= R passes iff L <= R + tol*max(1,|L|,|R|)
};

struct HypothesisCheck {
  bool applicable = false;
  double slack = 0.0;  // +infinity for unconditional bounds
};

struct BoundReport {
  BoundId bound_id{};
  bool applicable = false;
  double hypothesis_slack = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  Direction direction = Direction::Upper;
  bool satisfied = false;
  std::optional<double> tightness;
  std::optional<std::vector<double>> chain_values;
};

struct BoundInfo {
  BoundId id;
  std::string_view name;
  Direction direction;
  TargetQuantity target;
  bool complex_only;    // skipped under REAL fuzzing
  bool unconditional;   // hypothesis slack reported as +infinity
  std::string_view summary;
};

const std::vector<BoundInfo>& registry();
const BoundInfo& info(BoundId id);
std::string_view to_string(BoundId id);
std::string_view to_string(TargetQuantity q);
std::string_view to_string(Direction d);
std::optional<BoundId> bound_from_name(std::string_view name);

/// Throws ParamDomain when params violate their per-bound schema (missing
/// parameters, out-of-domain values, complex scalars on a REAL space).
void validate_params(BoundId id, const BoundParams& params, FieldTag field);

/// Signed satisfaction margin of the bound's hypothesis in its natural units,
/// e.g. r - ||x/||x|| - y/||y|| || for Angular.  applicable <=> slack >= 0.
HypothesisCheck check_hypothesis(BoundId id, const Inputs& in, const BoundParams& params);

/// Full evaluation: hypothesis, chain terms in source order (multi-branch
/// right-hand sides collapsed to sorted order with the minimum as rhs),
/// satisfaction at the configured tolerance, and the tightness ratio.
BoundReport evaluate(BoundId id, const Inputs& in, const BoundParams& params,
                     const EvalOptions& opt = {});

double quantity(TargetQuantity kind, const Vector& x, const Vector& y_or_e);
double quantity(TargetQuantity kind, const Vector& x, const Vector& y, const Vector& e);

/// Relative satisfaction margin of one link L <= R: (R-L)/max(1,|L|,|R|).
double link_margin(double lhs, double rhs);

/// Minimal normalized margin over every link asserted by the report
/// (consecutive chain links, or the single lhs/rhs pair).  Negative means a
/// violation; used by the fuzzer for worst-case tracking.
double report_margin(const BoundReport& rep);

inline bool leq_tol(double l, double r, double tol) {
  double s = 1.0;
  if (std::abs(l) > s) s = std::abs(l);
  if (std::abs(r) > s) s = std::abs(r);
  return l <= r + tol * s;
}

}  // namespace ineq

#endif
