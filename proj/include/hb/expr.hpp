#pragma once

#include <map>
#include <memory>
#include <string>

#include "hb/braiding.hpp"
#include "hb/io.hpp"
#include "hb/mor.hpp"

namespace hb {

// Morphism expressions:
//   expr   := term { "." term }          (composition, left-assoc, loosest)
//   term   := factor { "ox" factor }     (tensor product)
//   factor := IDENT | "id[" IDENT "]" | "c[" IDENT "," IDENT "]"
//           | "cinv[" IDENT "," IDENT "]" | "(" expr ")"
// "f . g" applies g first.  Every node keeps its source position for
// diagnostics.
struct SrcPos {
  int line = 1, col = 1;
};

struct MorExpr;
using ExprPtr = std::shared_ptr<const MorExpr>;

struct MorExpr {
  enum class Kind { Gen, Id, Braid, BraidInv, Compose, Tensor };
  Kind kind = Kind::Gen;
  SrcPos pos;
  std::string a, b;   // Gen: a = generator; Id: a = object; Braid*: a, b = objects
  ExprPtr lhs, rhs;   // Compose / Tensor
};

// Throws SyntaxError (with line/column) on lexical or grammatical errors.
ExprPtr parse_expr(const std::string& text);

// Canonical rendering with minimal parentheses; parse(print(e)) rebuilds
// the same tree.
std::string print_expr(const MorExpr& e);

// Evaluation environment: the braiding of the ambient category, the named
// objects usable in id[...] / c[...,...], and the generator morphisms.
struct EvalEnv {
  BraidingKind braid = BraidingKind::Flip;
  std::map<std::string, Obj> objects;
  std::map<std::string, Mor> generators;
};

// Environment for a structure file: binds H, K, Hd plus the generators of
// the kind (eta, mu, eps, delta, lambda, ... plus gamma/T/m/mu2/lambda2,
// aH/bH, alphaH and, where solvable, betaH).
EvalEnv env_for(const StructureFile& f, Exec ex = default_exec());

// Throws UnknownGenerator for unbound names, TypeMismatch (printing both
// object labels) for non-composable pieces; braiding errors propagate.
Mor eval_expr(const MorExpr& e, const EvalEnv& env);

}  // namespace hb
