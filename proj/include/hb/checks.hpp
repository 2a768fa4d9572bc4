#pragma once

#include "hb/report.hpp"
#include "hb/structures.hpp"

namespace hb {

// Axiom checkers.  Each returns a Report with one clause per displayed
// identity, evaluated in source order with no short-circuiting; engine
// errors inside a clause mark that clause failed instead of raising.

Report check_algebra(const AlgebraStruct& a);
Report check_coalgebra(const CoalgebraStruct& d);

// Bialgebra compatibility on a shared carrier (throws InvalidInput when the
// carriers differ structurally: that is API misuse, not an axiom failure).
Report check_bialgebra(const AlgebraStruct& a, const CoalgebraStruct& d, BraidingKind braid);

// Full Hopf check: bialgebra clauses + both antipode convolution identities
// + the derived anti-(co)multiplicativity and (co)unit identities.  When
// the structure is commutative or cocommutative, also checks that the
// antipode is involutive.
Report check_hopf(const HopfAlgebra& h);

// Cocommutativity (c . comul = comul) and involutivity of the braiding on
// the carrier square.
Report check_cocommutative(const HopfAlgebra& h);

// act : X (x) A -> A as a module action of the Hopf algebra x on the
// algebra a, plus the measuring identities and the redundant unit identity
// (reported as a separate derived clause).
Report check_module_algebra(const HopfAlgebra& x, const AlgebraStruct& a, const Mor& act);

// act : X (x) D -> D as a module action on the coalgebra d, plus the
// comeasuring identities (act is a coalgebra morphism in the module sense).
Report check_module_coalgebra(const HopfAlgebra& x, const CoalgebraStruct& d, const Mor& act);

}  // namespace hb
