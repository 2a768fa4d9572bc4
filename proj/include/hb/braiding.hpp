#pragma once

#include "hb/mor.hpp"
#include "hb/object.hpp"

namespace hb {

// The two supported symmetric braidings of the ambient category.
//   Flip:        c(x (x) y) = y (x) x
//   GradedFlip:  c(x (x) y) = (-1)^{|x||y|} y (x) x   (super vector spaces)
enum class BraidingKind { Flip, GradedFlip };

// c_{X,Y} : X (x) Y -> Y (x) X.  GradedFlip requires every participating
// object of dim > 1 to carry an explicit grading (MissingGrading otherwise);
// dim-1 objects such as K braid trivially whether or not they are graded.
Mor braiding(BraidingKind k, const Obj& x, const Obj& y);

// Inverse braiding (c_{X,Y})^{-1} : Y (x) X -> X (x) Y.  Both supported
// braidings are symmetric, so this equals c_{Y,X}; it is provided so that
// formulas quoted with explicit inverses transcribe one-to-one.
Mor braiding_inverse(BraidingKind k, const Obj& x, const Obj& y);

// Coevaluation a_X(K) : K -> X* (x) X  (sum of e_i^* (x) e_i).
Mor coevaluation(const Obj& x);

// Evaluation b_X(K) : X (x) X* -> K  (pairing e_i (x) e_j^* -> delta_ij).
Mor evaluation(const Obj& x);

}  // namespace hb
