#pragma once

#include <optional>

#include "ncontact/divisor.hpp"
#include "ncontact/elliptic.hpp"
#include "ncontact/report.hpp"

namespace ncontact {

/// Output of the contact pipeline for a divisor of degree d and torsion order n.
struct ContactResult {
  /// Weak n-contact function, NF1 form, canonical scalar.
  FunctionRep b_nd;
  /// NF2 form of b_nd (x-degree <= 2); defines the n-contact curve.
  BiPoly h_nd;
  int n = 0;
  int d = 0;
  Report report;
};

/// A function xi = xi0 + xi1 y with divisor n T - n O, built by Miller-style
/// double-and-add over tangent and chord lines with exact removal of vertical
/// lines. WrongOrder unless T has order exactly n.
FunctionRep build_xi(const EllipticCurve& curve, const EPoint& t, int n);

/// NF1(b_d^n xi) / (x - x_T)^n in canonical scalar form.
FunctionRep weak_contact(const FunctionRep& b_d, const EPoint& t, int n);

/// h = NF2(b_nd); DegreeMismatch unless 3 divides n d.
ContactResult contact_from_weak(const FunctionRep& b_nd, int n, int d);

/// Norm identity, O-avoidance, degree nd/3, class equality of h and b_nd,
/// O-multiplicity of the weak curve, and the exact contact divisor when the
/// support of b_d is rational.
Report verify_contact(const ContactResult& res, const FunctionRep& b_d, const EPoint& t);

/// build_xi -> weak_contact -> contact_from_weak -> verify_contact. The
/// degree d is read from b_d: its zero divisor is d + iota(T).
ContactResult run_contact(const FunctionRep& b_d, const EPoint& t, int n);

/// h + q (y^2 - f); same restriction to the curve.
BiPoly smoothing_fix(const BiPoly& h, const EllipticCurve& curve, const BiPoly& q);

}  // namespace ncontact
