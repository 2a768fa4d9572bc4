#pragma once

#include <string>
#include <vector>

#include "hb/bracelab.hpp"

namespace hb {

// Per-field outcome of a categorical round trip; the trip is an identity
// exactly when every field compares equal (exact rational equality).
struct FieldCmp {
  std::string field;
  bool equal = false;
  std::optional<Mor> diff;  // lhs - rhs when unequal and shapes agree
};

struct RoundTripReport {
  std::string direction;  // one of the four composite names below
  std::vector<FieldCmp> fields;
  bool identity() const;
};

// F : brace triples -> s-Hopf braces.  The second Hopf structure is
// (H, unit, mul^BT, counit, comul, T); the witness inverses are computed
// exactly (T is involutive in the cocommutative case but is inverted
// generically).  Validates the input eagerly: InvalidInput listing the
// failing clauses.
SHopfBraceWitness functor_F(const BraceTriple& t, Exec ex = default_exec());

// G : s-Hopf braces -> brace triples, (H1, Gamma_{H1}, antipode2).
BraceTriple functor_G(const SHopfBraceWitness& w);

// P : brace triples -> post-Hopf algebras with the closed-form beta cache
// (alpha . T^{-1}).
PostHopfAlgebra functor_P(const BraceTriple& t, Exec ex = default_exec());

// Q : cocommutative post-Hopf algebras satisfying (*) -> Hopf braces with
// second structure (H, unit, mul-hat, counit, comul, lambda-hat).  Gates:
// check_post_hopf (InvalidInput), check_cocommutative (InvalidInput),
// check_star_condition (StarConditionFailed).
SHopfBraceWitness functor_Q(const PostHopfAlgebra& p, Exec ex = default_exec());

// Round trips certified as exact identities.
RoundTripReport roundtrip_GF(const BraceTriple& t, Exec ex = default_exec());
RoundTripReport roundtrip_FG(const SHopfBraceWitness& w, Exec ex = default_exec());
RoundTripReport roundtrip_PGQ(const PostHopfAlgebra& p, Exec ex = default_exec());
RoundTripReport roundtrip_QGP(const BraceTriple& t, Exec ex = default_exec());

}  // namespace hb
