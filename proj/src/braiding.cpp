#include "hb/braiding.hpp"

#include "hb/error.hpp"

namespace hb {

namespace {

void require_grading(const Obj& x) {
  // dim-1 objects have a forced parity pattern; only larger ungraded
  // objects are ambiguous under GradedFlip.
  if (x.dim > 1 && !x.graded())
    throw MissingGrading("GradedFlip needs an explicit grading on " + obj_label(x));
}

}  // namespace

Mor braiding(BraidingKind k, const Obj& x, const Obj& y) {
  if (k == BraidingKind::GradedFlip) {
    require_grading(x);
    require_grading(y);
  }
  Mor c(tensor_obj(x, y), tensor_obj(y, x));
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j) {
      const bool neg = k == BraidingKind::GradedFlip && x.parity(i) == 1 && y.parity(j) == 1;
      c.rows[static_cast<std::size_t>(j) * x.dim + i].push_back(
          {i * y.dim + j, Scalar(neg ? -1 : 1)});
    }
  return c;
}

Mor braiding_inverse(BraidingKind k, const Obj& x, const Obj& y) {
  // Symmetric braidings: c_{X,Y}^{-1} = c_{Y,X}.
  return braiding(k, y, x);
}

Mor coevaluation(const Obj& x) {
  Mor a(unit_obj(), tensor_obj(dual_obj(x), x));
  for (int i = 0; i < x.dim; ++i)
    a.rows[static_cast<std::size_t>(i) * x.dim + i].push_back({0, Scalar(1)});
  return a;
}

Mor evaluation(const Obj& x) {
  Mor b(tensor_obj(x, dual_obj(x)), unit_obj());
  for (int i = 0; i < x.dim; ++i) b.rows[0].push_back({i * x.dim + i, Scalar(1)});
  return b;
}

}  // namespace hb
