#pragma once

#include <optional>
#include <vector>

#include "hb/mor.hpp"
#include "hb/parallel.hpp"

namespace hb {

// Exact solver for square systems A X = B over the rationals.
//
// Method: each row (A row plus its B columns appended) is scaled by the
// LCM of its denominators to integers and reduced by its content gcd;
// elimination is fraction-free (cross-multiplication) with the pivot taken
// from the first remaining row whose leading column is the pivot column;
// updated rows are content-reduced again to bound coefficient growth.
// Back substitution reconstructs the exact rational solution.
struct SolveOutcome {
  bool ok = false;
  int rank = 0;                            // pivots found (== n on success)
  std::vector<std::vector<Scalar>> x;      // n rows of m columns when ok
};

// a: n sparse rows over columns 0..n-1;  b: n rows of m dense columns.
SolveOutcome solve_exact(int n, const std::vector<Mor::Row>& a,
                         const std::vector<std::vector<Scalar>>& b,
                         Exec ex = default_exec());

// Matrix inverse of a square morphism via solve_exact against the identity.
std::optional<Mor> try_invert(const Mor& f, Exec ex = default_exec());

// As try_invert but throws NotInvertible (with rank) on failure or when
// the morphism is not square.
Mor invert(const Mor& f, Exec ex = default_exec());

}  // namespace hb
