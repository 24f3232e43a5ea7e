#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncontact/elliptic.hpp"
#include "ncontact/projective.hpp"
#include "ncontact/report.hpp"
#include "ncontact/sparse_poly.hpp"

namespace ncontact {

struct SmoothnessWitness {
  Chart chart;
  /// Reduced Groebner basis of the singular-locus ideal in that chart.
  std::vector<BiPoly> basis;
};

struct SmoothnessVerdict {
  bool smooth = false;
  std::optional<SmoothnessWitness> witness;
};

/// Jacobian criterion chart by chart: the curve F = 0 is smooth iff
/// (F, dF/du, dF/dv) dehomogenized generates the unit ideal in all three
/// standard charts. The witness is the first singular chart (Z, Y, X order).
SmoothnessVerdict is_smooth_projective(const TernaryForm& form);

/// True when every element of the witness basis vanishes at the point,
/// given in the witness chart's two coordinates.
bool witness_contains(const SmoothnessWitness& w, const Rational& u, const Rational& v);

/// F and its three partials vanish at the projective point.
bool is_singular_at(const TernaryForm& form, const std::array<Rational, 3>& point);

struct SmoothingChoice {
  BiPoly q;
  BiPoly h_smooth;
};

/// Tries q = 0, 1, x + y + 1, x^3 + y^3 + 1, x^5 + y^5 + 1, then low-degree
/// monomials, keeping deg q <= deg h - 3 so the curve degree and the
/// coefficient of y^deg h are unchanged; first q giving a smooth curve wins.
std::optional<SmoothingChoice> auto_smoothing_fix(const BiPoly& h, const EllipticCurve& curve);

/// n / torsion_order; NotDivisible unless the order divides n.
int splitting_number(int n, int torsion_order);

/// lambda A + mu B for forms of equal degree.
TernaryForm pencil_member(const Rational& lambda, const Rational& mu, const TernaryForm& a, const TernaryForm& b);

struct ZariskiEntry {
  std::string label;
  int torsion_order;
  int splitting;
};

struct ZariskiReport {
  int n = 0;
  std::vector<ZariskiEntry> entries;
  /// Splitting numbers pairwise distinct.
  bool distinguished = false;

  /// "pair", "triple", "quartet", ... for the entry count.
  std::string tuple_name() const;
  std::string render_table() const;
  Report to_report() const;
};

ZariskiReport zariski_verdict(int n, const std::vector<std::pair<std::string, int>>& configs);

}  // namespace ncontact
