#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hb {

// Object of the ambient category: a based finite-dimensional space with an
// optional Z/2 grading (one parity bit per basis vector) and a display name.
//
// Equality is structural and decides composability: dimensions must match
// and effective parities must match, where a missing grading reads as
// all-even.  Names never participate in equality, so the category is strict:
// K (x) X, X, and X (x) K are literally equal objects.
struct Obj {
  int dim = 1;
  std::optional<std::vector<std::uint8_t>> grading;  // parities, size dim
  std::string name;

  bool graded() const { return grading.has_value(); }
  int parity(int i) const { return grading ? (*grading)[i] & 1 : 0; }
};

bool operator==(const Obj& a, const Obj& b);
inline bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

// The monoidal unit K: dim 1 with the explicit grading [0].
Obj unit_obj();

// X (x) Y with the left-major basis e_i (x) f_j  ->  i * Y.dim + j.
// Carries a grading whenever either factor does (parities add mod 2;
// the ungraded factor contributes zeros).
Obj tensor_obj(const Obj& x, const Obj& y);

// Canonical dual: same dim and grading, name decorated with '*'.
Obj dual_obj(const Obj& x);

// Human-readable label for diagnostics: name (or "?") plus dimension.
std::string obj_label(const Obj& x);

}  // namespace hb
