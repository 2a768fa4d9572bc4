#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "hb/object.hpp"
#include "hb/scalar.hpp"

namespace hb {

// Morphism dom -> cod: an exact-rational matrix of shape cod.dim x dom.dim,
// row index = codomain basis index.  The logical contract is dense; storage
// is one sorted sparse row per codomain index (zeros never stored) because
// structure maps and their tensor powers are overwhelmingly sparse.
struct Mor {
  using Entry = std::pair<int, Scalar>;  // (column, nonzero value)
  using Row = std::vector<Entry>;        // strictly increasing columns

  Obj dom, cod;
  std::vector<Row> rows;  // size cod.dim

  Mor() = default;
  Mor(Obj dom_, Obj cod_)
      : dom(std::move(dom_)), cod(std::move(cod_)), rows(static_cast<std::size_t>(cod.dim)) {}

  // Dense-style element access; returns 0 for absent entries.  Both
  // accessors reject out-of-range indices with InvalidInput.
  const Scalar& at(int r, int c) const;

  // Dense-style element write; erases the entry when v == 0.
  void set(int r, int c, const Scalar& v);

  long nnz() const;
  std::vector<std::vector<Scalar>> dense() const;
};

Mor identity(const Obj& x);
Mor zero_mor(const Obj& dom, const Obj& cod);
Mor from_dense(const Obj& dom, const Obj& cod, const std::vector<std::vector<Scalar>>& m);

// f after g (apply g first).  Throws DomainMismatch unless g.cod == f.dom.
Mor compose(const Mor& f, const Mor& g);

// f (x) g on the left-major bases of the tensor objects.  No sign rule:
// braiding morphisms carry all the signs of the graded symmetry.
Mor tensor(const Mor& f, const Mor& g);

// Entry-wise equality.  Morphisms with structurally different objects are
// simply unequal (no exception), so candidate identities can be compared.
bool mor_equal(const Mor& f, const Mor& g);

Mor add(const Mor& f, const Mor& g);
Mor sub(const Mor& f, const Mor& g);
Mor scale(const Scalar& s, const Mor& f);

// Fold helpers so checker code reads like the displayed equations:
// chain({f, g, h}) = f . g . h (rightmost applies first),
// tens({f, g, h})  = f (x) g (x) h.
Mor chain(std::initializer_list<Mor> fs);
Mor tens(std::initializer_list<Mor> fs);

}  // namespace hb
