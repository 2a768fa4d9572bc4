#include <doctest.h>

#include "corpus.hpp"
#include "hb/bracelab.hpp"
#include "hb/checks.hpp"
#include "hb/convolution.hpp"
#include "hb/error.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"
#include "hb/structures.hpp"

using namespace hb;

namespace {

HopfBrace s3_opposite_brace() {
  return hopf_brace_from_skew_brace(opposite_skew_brace(*find_builtin("S3")));
}

BraceTriple s3_triple() {
  const HopfBrace b = s3_opposite_brace();
  return functor_G({b, antipode_inverse(b.first()), antipode_inverse(b.second())});
}

}  // namespace

TEST_CASE("gamma of a trivial brace collapses to eps (x) id") {
  for (const char* name : {"C1", "C4", "S3"}) {
    const HopfBrace b = hopf_brace_from_skew_brace(trivial_skew_brace(*find_builtin(name)));
    const Mor expect = tensor(b.counit, identity(b.carrier));
    CHECK(mor_equal(gamma_of_brace(b), expect));
  }
}

TEST_CASE("gamma of the opposite S3 brace is conjugation on the basis") {
  const FiniteGroup& s3 = *find_builtin("S3");
  const HopfBrace b = s3_opposite_brace();
  const Mor g = gamma_of_brace(b);
  for (int x = 0; x < s3.n; ++x)
    for (int y = 0; y < s3.n; ++y) {
      const int conj = s3.mul(s3.mul(s3.inv[static_cast<std::size_t>(x)], y), x);
      CHECK(g.at(conj, x * s3.n + y) == Scalar(1));
    }
  CHECK(g.nnz() == s3.n * s3.n);
}

TEST_CASE("gamma on any linearized skew brace matches the set-level formula") {
  // Gamma(g (x) h) = g^{-1} . (g * h)
  for (const SkewBrace& s : corpus::corpus().skew_braces) {
    const HopfBrace b = hopf_brace_from_skew_brace(s);
    const Mor g = gamma_of_brace(b);
    bool all = true;
    for (int x = 0; all && x < s.dot.n; ++x)
      for (int y = 0; all && y < s.dot.n; ++y) {
        const int want = s.dot.mul(s.dot.inv[static_cast<std::size_t>(x)], s.circ.mul(x, y));
        all = g.at(want, x * s.dot.n + y) == Scalar(1);
      }
    INFO(s.circ.name);
    CHECK(all);
    CHECK(g.nnz() == s.dot.n * s.dot.n);
  }
}

TEST_CASE("identity (1.10): Gamma recovers the first antipode") {
  for (const HopfBrace& b : corpus::corpus().braces) {
    const Mor g = gamma_of_brace(b);
    const Mor lhs = chain({g, tensor(identity(b.carrier), b.antipode2), b.comul});
    CHECK(mor_equal(lhs, b.antipode1));
  }
}

TEST_CASE("mu_bt on the S3 triple equals the opposite Cayley linearization") {
  // two independent routes to the same product
  const BraceTriple t = s3_triple();
  const FiniteGroup& s3 = *find_builtin("S3");
  const HopfAlgebra op = group_algebra(opposite_skew_brace(s3).circ);
  CHECK(mor_equal(mu_bt(t), op.mul));
  // and the trivial triple keeps its product
  const HopfAlgebra h = group_algebra(s3);
  CHECK(mor_equal(mu_bt(corpus::trivial_triple(h)), h.mul));
}

TEST_CASE("alpha reconstructs m through evaluation (both routes)") {
  for (const PostHopfAlgebra& p : corpus::corpus().posts) {
    const HopfAlgebra& h = p.hopf;
    const Mor alpha = alpha_of(h, p.m);
    const Mor i = identity(h.carrier);
    const Mor ev = evaluation(h.carrier);
    // eq(4.2): m . c^{-1} = (ev (x) H) . (H (x) alpha)
    const Mor lhs42 = compose(p.m, braiding_inverse(h.braid, h.carrier, h.carrier));
    const Mor rhs42 = chain({tensor(ev, i), tensor(i, alpha)});
    CHECK(mor_equal(lhs42, rhs42));
    // eq(4.3): m = (ev (x) H) . (H (x) alpha) . c
    const Mor rhs43 = chain({tensor(ev, i), tensor(i, alpha),
                             braiding(h.braid, h.carrier, h.carrier)});
    CHECK(mor_equal(p.m, rhs43));
  }
}

TEST_CASE("beta: closed form equals the solver route") {
  const BraceTriple t = s3_triple();
  const Mor closed = beta_closed_form(t);
  const Mor alpha = alpha_of(t.hopf, t.gamma);
  const ConvolutionContext ctx{t.hopf.coalgebra(), dual_pair_algebra(t.hopf.carrier)};
  CHECK(mor_equal(closed, convolution_inverse(ctx, alpha)));
  // cocommutative carrier: T . T = id, so beta = alpha . T as well
  CHECK(mor_equal(closed, compose(alpha, t.T)));
}

TEST_CASE("beta caching on PostHopfAlgebra is idempotent") {
  const PostHopfAlgebra p = functor_P(s3_triple());
  CHECK(p.beta_cached());  // P seeds the cache with the closed form
  const Mor b1 = p.beta();
  const Mor b2 = p.beta();
  CHECK(mor_equal(b1, b2));

  const PostHopfAlgebra fresh{p.hopf, p.m};  // no cache: solver route
  CHECK(!fresh.beta_cached());
  CHECK(mor_equal(fresh.beta(), b1));
  CHECK(fresh.beta_cached());
}

TEST_CASE("lambda_hat: trivial post gives the antipode, P-image gives T") {
  const HopfAlgebra h = group_algebra(*find_builtin("S3"));
  CHECK(mor_equal(lambda_hat(corpus::trivial_post(h)), h.antipode));

  const BraceTriple t = s3_triple();
  CHECK(mor_equal(lambda_hat(functor_P(t)), t.T));
}

TEST_CASE("lambda_hat reports BetaUnavailable when alpha cannot be inverted") {
  const HopfAlgebra h = group_algebra(*find_builtin("C2"));
  const PostHopfAlgebra broken{h, zero_mor(tensor_obj(h.carrier, h.carrier), h.carrier)};
  CHECK_THROWS_AS(lambda_hat(broken), BetaUnavailable);
  CHECK_THROWS_AS(beta_tilde(broken), BetaUnavailable);
}

TEST_CASE("beta_tilde factors through alpha_tilde and T on P-images") {
  for (const BraceTriple& t : corpus::corpus().triples) {
    const PostHopfAlgebra p = functor_P(t);
    const Mor lhs = beta_tilde(p);
    const Mor rhs = compose(alpha_tilde(p), tensor(identity(t.hopf.carrier), t.T));
    CHECK(mor_equal(lhs, rhs));
  }
}

TEST_CASE("checkers pass on the trivial structures of every dimension") {
  for (const char* name : {"C1", "C2", "C6", "Q8"}) {
    const HopfAlgebra h = group_algebra(*find_builtin(name));
    CHECK(check_brace_triple(corpus::trivial_triple(h)).all_pass());
    CHECK(check_post_hopf(corpus::trivial_post(h)).all_pass());
    CHECK(check_star_condition(corpus::trivial_post(h)).all_pass());
  }
  // graded trivial triple
  CHECK(check_brace_triple(corpus::trivial_triple(super_line())).all_pass());
}

TEST_CASE("s-Hopf brace checker validates the witnesses") {
  const HopfBrace b = s3_opposite_brace();
  const SHopfBraceWitness good{b, antipode_inverse(b.first()), antipode_inverse(b.second())};
  CHECK(check_s_hopf_brace(good).all_pass());

  SHopfBraceWitness bad = good;
  bad.lambda1_inv = zero_mor(b.carrier, b.carrier);
  const Report r = check_s_hopf_brace(bad);
  CHECK(!r.all_pass());
  const Clause* c = r.find("lambda1.invertible");
  REQUIRE(c != nullptr);
  CHECK(!c->pass);
}

TEST_CASE("perturbing gamma breaks a named clause with a nonzero diff") {
  BraceTriple t = s3_triple();
  t.gamma.set(0, 0, t.gamma.at(0, 0) + Scalar(1));
  const Report r = check_brace_triple(t);
  CHECK(!r.all_pass());
  bool some_diff = false;
  for (const Clause& c : r.clauses)
    if (!c.pass && c.diff && c.diff->nnz() > 0) some_diff = true;
  CHECK(some_diff);
}

TEST_CASE("lambda_hat identities on a corpus sample") {
  const PostHopfAlgebra p = functor_P(s3_triple());
  const Report r = check_lambda_hat(p);
  INFO(r.failing_keys());
  CHECK(r.all_pass());
  for (const char* key : {"eq(4.5)", "eq(4.6)", "eq(4.7)", "lambda_hat.counit",
                          "lambda_hat.comul", "lambda_hat.involutive", "lambda_hat.conv_left"})
    CHECK(r.find(key) != nullptr);
}
