#include <doctest.h>

#include "hb/error.hpp"
#include "hb/mor.hpp"
#include "hb/object.hpp"

using namespace hb;

namespace {
const Obj A{2, std::nullopt, "A"};
const Obj B{3, std::nullopt, "B"};
}  // namespace

TEST_CASE("object equality is dimension plus effective parity") {
  CHECK(Obj{2, std::nullopt, "X"} == Obj{2, std::nullopt, "Y"});  // names ignored
  CHECK(Obj{2, std::vector<uint8_t>{0, 0}, "X"} == Obj{2, std::nullopt, "Y"});  // all-even = ungraded
  CHECK(Obj{2, std::vector<uint8_t>{0, 1}, "X"} != Obj{2, std::nullopt, "Y"});
  CHECK(Obj{2, std::nullopt, "X"} != Obj{3, std::nullopt, "X"});
  // strictness: K (x) X == X == X (x) K
  CHECK(tensor_obj(unit_obj(), A) == A);
  CHECK(tensor_obj(A, unit_obj()) == A);
}

TEST_CASE("tensor object grading is the parity sum") {
  const Obj L{2, std::vector<uint8_t>{0, 1}, "L"};
  const Obj LL = tensor_obj(L, L);
  REQUIRE(LL.dim == 4);
  REQUIRE(LL.grading.has_value());
  // left-major flat index i*dim + j
  CHECK((*LL.grading)[0] == 0);  // 0+0
  CHECK((*LL.grading)[1] == 1);  // 0+1
  CHECK((*LL.grading)[2] == 1);  // 1+0
  CHECK((*LL.grading)[3] == 0);  // 1+1 mod 2
  // graded (x) ungraded still carries a grading
  CHECK(tensor_obj(L, A).grading.has_value());
  CHECK(dual_obj(L).grading == L.grading);
}

TEST_CASE("morphism storage: zeros are never stored") {
  Mor f = zero_mor(A, A);
  CHECK(f.nnz() == 0);
  f.set(0, 1, Scalar(3));
  CHECK(f.nnz() == 1);
  f.set(0, 1, Scalar(0));
  CHECK(f.nnz() == 0);
  CHECK(f.at(0, 1) == Scalar(0));
}

TEST_CASE("composition is the matrix product, applied right-to-left") {
  // f: A->B picks (x,y) -> (x, y, 0); g: B->A drops the last coordinate
  Mor f = from_dense(A, B, {{1, 0}, {0, 1}, {0, 0}});
  Mor g = from_dense(B, A, {{1, 0, 0}, {0, 1, 0}});
  const Mor gf = compose(g, f);
  CHECK(mor_equal(gf, identity(A)));
  const Mor fg = compose(f, g);
  CHECK(fg.at(2, 2) == Scalar(0));
  CHECK(fg.at(0, 0) == Scalar(1));
  CHECK_THROWS_AS(compose(f, f), DomainMismatch);
}

TEST_CASE("tensor is the Kronecker product with left-major indexing") {
  Mor f = from_dense(A, A, {{1, 2}, {3, 4}});
  Mor g = from_dense(A, A, {{0, 5}, {6, 7}});
  const Mor fg = tensor(f, g);
  const Obj AA = tensor_obj(A, A);
  CHECK(fg.dom == AA);
  CHECK(fg.cod == AA);
  // entry ((i,k),(j,l)) = f[i][j] * g[k][l]
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(fg.at(i * 2 + k, j * 2 + l) == f.at(i, j) * g.at(k, l));
  // no sign rule in the plain tensor: signs live in the braiding alone
  const Obj L{2, std::vector<uint8_t>{0, 1}, "L"};
  Mor odd = from_dense(L, L, {{0, 1}, {1, 0}});
  const Mor oo = tensor(odd, odd);
  CHECK(oo.at(0 * 2 + 1, 1 * 2 + 0) == Scalar(1));  // never -1
}

TEST_CASE("interchange law links tensor and composition") {
  Mor f = from_dense(A, A, {{1, 2}, {3, 4}});
  Mor g = from_dense(A, B, {{1, 0}, {2, 1}, {0, 3}});
  Mor h = from_dense(A, A, {{0, 1}, {1, 1}});
  Mor k = from_dense(B, A, {{1, 1, 0}, {0, 1, 1}});
  // (g tensor k) . (f tensor h)? shapes: want (g.f) tensor (k.h)
  CHECK(mor_equal(compose(tensor(g, k), tensor(f, zero_mor(A, B))),
                  tensor(compose(g, f), compose(k, zero_mor(A, B)))));
  Mor hb_ = from_dense(A, B, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(mor_equal(compose(tensor(g, k), tensor(f, hb_)),
                  tensor(compose(g, f), compose(k, hb_))));
}

TEST_CASE("add, sub, scale, chain, tens") {
  Mor f = from_dense(A, A, {{1, 2}, {3, 4}});
  Mor g = from_dense(A, A, {{1, 0}, {0, 1}});
  CHECK(mor_equal(add(f, scale(Scalar(-1), f)), zero_mor(A, A)));
  CHECK(sub(f, f).nnz() == 0);
  CHECK(mor_equal(scale(Scalar(2), g), add(g, g)));
  CHECK(mor_equal(chain({f, g, f}), compose(f, compose(g, f))));
  CHECK(mor_equal(tens({f, g}), tensor(f, g)));
  CHECK_THROWS_AS(add(f, from_dense(A, B, {{0, 0}, {0, 0}, {0, 0}})), DomainMismatch);
}

TEST_CASE("from_dense validates shape") {
  CHECK_THROWS_AS(from_dense(A, A, {{1, 2, 3}, {0, 0, 0}}), InvalidInput);
  CHECK_THROWS_AS(from_dense(A, A, {{1, 2}}), InvalidInput);
}

TEST_CASE("mor_equal compares objects structurally") {
  Mor f = identity(A);
  Mor g = identity(Obj{2, std::nullopt, "Other"});
  CHECK(mor_equal(f, g));  // same dim, same (absent) grading
  Mor h = identity(Obj{2, std::vector<uint8_t>{0, 1}, "L"});
  CHECK(!mor_equal(f, h));
}

TEST_CASE("element accessors reject out-of-range indices") {
  Mor f = identity(A);  // 2x2
  CHECK(f.at(1, 1) == Scalar(1));
  CHECK_THROWS_AS(f.at(2, 0), InvalidInput);
  CHECK_THROWS_AS(f.at(0, 2), InvalidInput);
  CHECK_THROWS_AS(f.at(-1, 0), InvalidInput);
  CHECK_THROWS_AS(f.set(2, 0, Scalar(1)), InvalidInput);
  CHECK_THROWS_AS(f.set(0, -1, Scalar(1)), InvalidInput);
  CHECK(mor_equal(f, identity(A)));  // failed writes leave f untouched
}
