#pragma once

#include <string>
#include <vector>

#include "hb/bracelab.hpp"
#include "hb/parallel.hpp"
#include "hb/report.hpp"
#include "hb/structures.hpp"

namespace hb {

// Finite group as a validated Cayley table on {0, ..., n-1}.
struct FiniteGroup {
  std::string name;
  int n = 1;
  std::vector<std::vector<int>> table;  // table[i][j] = i * j
  int e = 0;
  std::vector<int> inv;

  int mul(int i, int j) const { return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

// Validates the table (Latin square, identity, associativity, inverses)
// and fills e/inv.  Throws InvalidInput on any violation.
FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table);

// True iff `t` is the Cayley table of a group; reports the identity.
bool is_group_table(const std::vector<std::vector<int>>& t, int* e_out = nullptr);

// All automorphisms of g as permutations, in lexicographic order.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

// Built-in catalogue: C1..C6, C2xC2, S3, C8, D4, Q8, C2xC4, C2xC2xC2.
const std::vector<FiniteGroup>& builtin_groups();
const FiniteGroup* find_builtin(const std::string& name);

// Two group operations on one carrier set; `dot` is the additive-side
// group, `circ` the multiplicative-side one.
struct SkewBrace {
  FiniteGroup dot, circ;
};

// Element-wise checks: both tables are groups on the same set, identities
// coincide, and the compatibility law
//   g * (h . t) = (g * h) . g^{-1} . (g * t)
// holds for all n^3 triples (dot written '.', circ written '*').
Report check_skew_brace(const SkewBrace& s);

// circ = dot (every group is a skew brace over itself).
SkewBrace trivial_skew_brace(const FiniteGroup& g);

// circ = opposite group: g * h = h . g.
SkewBrace opposite_skew_brace(const FiniteGroup& g);

// Complete enumeration of skew braces with the given dot group, via
// lambda-maps into Aut(G, .): for each assignment g != e -> Aut, form
// g * h := g . lambda_g(h) and keep the candidates where (G, *) is a group
// (the compatibility law is then automatic, but is re-verified).  Results
// are deduplicated by table and sorted canonically, so the parallel lane
// merges deterministically.  Throws BoundExceeded when g.n > bound.
std::vector<SkewBrace> enumerate_skew_braces(const FiniteGroup& g, int bound = 6,
                                             Exec ex = default_exec());

// Independent oracle for small orders: brute force over all star tables
// with row/column constraints, checking the group axioms and the
// compatibility law directly.  Shares no code with the lambda-map route.
std::vector<SkewBrace> enumerate_skew_braces_direct(const FiniteGroup& g, int bound = 4,
                                                    Exec ex = default_exec());

// Group algebra K[G] with the group-like coalgebra structure and the
// inversion antipode.  Group algebras are ungraded: only Flip is allowed
// (InvalidInput otherwise).
HopfAlgebra group_algebra(const FiniteGroup& g, BraidingKind braid = BraidingKind::Flip);

// Linearization of a skew brace: mul1/antipode1 from dot, mul2/antipode2
// from circ, shared group-like coalgebra.  Throws InvalidSkewBrace when
// check_skew_brace fails.
HopfBrace hopf_brace_from_skew_brace(const SkewBrace& s);

// The super line K[x]/(x^2) with |x| = 1 over GradedFlip: x primitive,
// antipode(x) = -x.  Hopf only in the graded sense.
HopfAlgebra super_line();

}  // namespace hb
