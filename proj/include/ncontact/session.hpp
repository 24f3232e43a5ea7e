#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncontact/divisor.hpp"
#include "ncontact/elliptic.hpp"
#include "ncontact/report.hpp"
#include "ncontact/sparse_poly.hpp"

namespace ncontact {

struct CurveDecl {
  std::string name;
  EllipticCurve curve;
  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct PointDecl {
  std::string name;
  std::string curve;
  EPoint point;
  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

struct DivisorDecl {
  std::string name;
  std::string curve;
  EffectiveDivisor divisor;
  friend bool operator==(const DivisorDecl&, const DivisorDecl&) = default;
};

struct PolyDecl {
  std::string name;
  BiPoly poly;
  friend bool operator==(const PolyDecl&, const PolyDecl&) = default;
};

struct FormDecl {
  std::string name;
  TernaryForm form;
  friend bool operator==(const FormDecl&, const FormDecl&) = default;
};

using Declaration = std::variant<CurveDecl, PointDecl, DivisorDecl, PolyDecl, FormDecl>;

/// One pipeline invocation. `args` are already validated and normalized;
/// their meaning depends on the verb:
///   torsion P [bound k]        -> {P, k}
///   xi P n                     -> {P, n}
///   contact b P n [smooth-fix auto|q] -> {b, P, n[, fix]}
///   construct D                -> {D}
///   smooth F                   -> {F}
///   zariski n d1,d2,...        -> {n, d1, d2, ...}
///   reproduce ID               -> {ID}
struct Command {
  std::string verb;
  std::vector<std::string> args;
  friend bool operator==(const Command&, const Command&) = default;
};

struct Session {
  std::vector<Declaration> declarations;
  std::vector<Command> commands;
  friend bool operator==(const Session&, const Session&) = default;
};

/// Line-oriented session text; '#' starts a comment.
///   curve NAME: y^2 = <cubic in x>
///   point NAME on CURVE = (r, r) | O
///   divisor NAME on CURVE = { (r, r): m, ... }
///   poly NAME = <expr in x, y>
///   form NAME = <homogeneous expr in X, Y, Z>
/// followed or interleaved by the commands listed on Command. Every name is
/// declared once, before use.
Session parse_session(std::string_view text);

/// Canonical session text; parse_session(render(s)) == s.
std::string render(const Session& s);

struct ExecutionResult {
  std::vector<Report> reports;
  /// 0 iff every check in every report passed.
  int exit_code = 0;
};

/// Runs the commands in order. Module errors are rethrown as Error with the
/// command text prepended.
ExecutionResult execute(const Session& s);

}  // namespace ncontact
