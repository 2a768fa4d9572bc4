#include "hb/structures.hpp"

#include "hb/error.hpp"
#include "hb/linalg.hpp"

namespace hb {

namespace {

Mor invert_antipode(const Mor& antipode) {
  if (auto inv = try_invert(antipode)) return *inv;
  SolveOutcome s = solve_exact(antipode.dom.dim, antipode.rows, {});
  throw AntipodeNotInvertible("antipode is singular: rank " + std::to_string(s.rank) + " of " +
                              std::to_string(antipode.dom.dim), s.rank, antipode.dom.dim);
}

}  // namespace

const Mor& antipode_inverse(HopfAlgebra& h) {
  if (!h.antipode_inv) h.antipode_inv = invert_antipode(h.antipode);
  return *h.antipode_inv;
}

Mor antipode_inverse(const HopfAlgebra& h) {
  if (h.antipode_inv) return *h.antipode_inv;
  return invert_antipode(h.antipode);
}

HopfAlgebra cop(const HopfAlgebra& h) {
  HopfAlgebra r = h;
  // c^{-1}_{H,H} = c_{H,H} for a symmetric braiding on equal factors.
  r.comul = compose(braiding_inverse(h.braid, h.carrier, h.carrier), h.comul);
  r.antipode = antipode_inverse(h);
  r.antipode_inv = h.antipode;
  return r;
}

}  // namespace hb
