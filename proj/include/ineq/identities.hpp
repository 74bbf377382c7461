#ifndef INEQ_IDENTITIES_HPP
#define INEQ_IDENTITIES_HPP

#include "ineq/bounds.hpp"
#include "ineq/space.hpp"

namespace ineq {

struct IdentityResidual {
  double absolute = 0.0;  // |LHS - RHS|
  double scale = 1.0;     // 1 + |LHS|
  double relative() const { return absolute / scale; }
};

/// The corner-scalar kernel identity and its two building blocks, evaluated
/// as residuals.  For unit e, scalar corners g, G with midpoint m = (g+G)/2
/// and b = <x,e>:
///   kernel:        ||x||^2 - |b|^2 - ||x - m e||^2
///                    = (Re G - Re b)(Re b - Re g) + (Im G - Im b)(Im b - Im g)
///                      - |G - g|^2 / 4
///   decomposition: ||x||^2 - |b|^2 = Re[(G - b)(conj(b) - conj(g))]
///                                     - Re<G e - x, x - g e>
///   midpoint:      Re<G e - x, x - g e> = |G - g|^2 / 4 - ||x - m e||^2
struct KernelIdentityResiduals {
  IdentityResidual kernel;
  IdentityResidual decomposition;
  IdentityResidual midpoint;
};

KernelIdentityResiduals kernel_identity_residual(const Vector& x, const Vector& e, Cx gamma,
                                                 Cx cap_gamma);

/// Residuals of the four gap identities:
///   angle:       || x/||x|| - y/||y|| ||^2  -  2 (||x||||y|| - Re<x,y>) / (||x||||y||)
///   projection:  ||y||^2 ||x - (<x,y>/||y||^2) y||^2 - (||x||^2||y||^2 - |<x,y>|^2)
///   sum_square:  (||x||+||y||)^2 - ||x+y||^2 - 2 (||x||||y|| - Re<x,y>)
///   diff_square: ||x-y||^2 - (||x||-||y||)^2 - 2 (||x||||y|| - Re<x,y>)
struct GapIdentityResiduals {
  IdentityResidual angle;
  IdentityResidual projection;
  IdentityResidual sum_square;
  IdentityResidual diff_square;
};

GapIdentityResiduals gap_identities(const Vector& x, const Vector& y);

/// Both algebraic forms of an equivalent hypothesis pair.  form_a >= 0 iff
/// form_b >= 0.  For AaQuad and GammaDisc the two forms are equal quantities
/// (midpoint identity); for Angular and Proj they agree in sign only.
struct EquivalenceForms {
  double form_a = 0.0;
  double form_b = 0.0;
};

EquivalenceForms hypothesis_equivalence(BoundId id, const Inputs& in, const BoundParams& params);

}  // namespace ineq

#endif
