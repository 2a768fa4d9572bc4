#pragma once

#include <optional>

#include "hb/braiding.hpp"
#include "hb/mor.hpp"
#include "hb/object.hpp"

namespace hb {

// (A, unit, mul):  unit : K -> A,  mul : A (x) A -> A.
struct AlgebraStruct {
  Obj carrier;
  Mor unit, mul;
};

// (D, counit, comul):  counit : D -> K,  comul : D -> D (x) D.
struct CoalgebraStruct {
  Obj carrier;
  Mor counit, comul;
};

// Hopf algebra in the ambient symmetric category fixed by `braid`.
// `antipode_inv` is an optional cache; antipode_inverse() fills it lazily
// by exact matrix inversion.
struct HopfAlgebra {
  Obj carrier;
  BraidingKind braid = BraidingKind::Flip;
  Mor unit, mul, counit, comul, antipode;
  std::optional<Mor> antipode_inv;

  AlgebraStruct algebra() const { return {carrier, unit, mul}; }
  CoalgebraStruct coalgebra() const { return {carrier, counit, comul}; }
  Mor braid_cc() const { return braiding(braid, carrier, carrier); }
};

// The antipode inverse, computed (and cached) on first use.
// Throws AntipodeNotInvertible when the antipode is singular.
const Mor& antipode_inverse(HopfAlgebra& h);
Mor antipode_inverse(const HopfAlgebra& h);  // uncached variant

// Co-opposite Hopf algebra (H, unit, mul, counit, c^{-1} . comul, antipode^{-1}).
// Both supported braidings are symmetric, so the result lives over the same
// braiding kind (the inverse braiding coincides with it).
HopfAlgebra cop(const HopfAlgebra& h);

}  // namespace hb
