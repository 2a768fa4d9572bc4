#pragma once

#include "hb/linalg.hpp"
#include "hb/structures.hpp"

namespace hb {

// Convolution algebra Hom(D, A) for a coalgebra D and an algebra A:
//   f * g = mul_A . (f (x) g) . comul_D,   unit = unit_A . counit_D.
struct ConvolutionContext {
  CoalgebraStruct source;
  AlgebraStruct target;

  Mor unit() const { return compose(target.unit, source.counit); }
};

// f * g.  Throws DomainMismatch unless both f, g : D -> A.
Mor convolve(const ConvolutionContext& ctx, const Mor& f, const Mor& g);

// Right convolution inverse: solves the exact linear system
// convolve(f, x) = unit over dim(D)·dim(A) unknowns, then verifies the
// left identity convolve(x, f) = unit.  Throws NotInvertible (with the
// achieved rank) when the system is singular and InternalInconsistency
// if the verification of the left identity ever fails.
Mor convolution_inverse(const ConvolutionContext& ctx, const Mor& f, Exec ex = default_exec());

// Antipode of a bialgebra as the convolution inverse of the identity in
// Hom(H, H).  Carriers of alg and coalg must agree.
Mor derive_antipode(const AlgebraStruct& alg, const CoalgebraStruct& coalg,
                    Exec ex = default_exec());

}  // namespace hb
