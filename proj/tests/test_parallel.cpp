#include <doctest.h>

#include <atomic>
#include <vector>

#include "corpus.hpp"
#include "hb/convolution.hpp"
#include "hb/error.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"
#include "hb/linalg.hpp"
#include "hb/parallel.hpp"

using namespace hb;

TEST_CASE("execution lane plumbing") {
  CHECK(max_threads() >= 1);
  CHECK(thread_id() >= 0);
  CHECK(thread_id() < max_threads());
#ifdef _OPENMP
  CHECK(default_exec() == Exec::Parallel);
#else
  CHECK(default_exec() == Exec::Serial);
#endif
}

TEST_CASE("parallel_for visits every index exactly once on both lanes") {
  for (Exec ex : {Exec::Serial, Exec::Parallel}) {
    const long n = 1000;
    std::vector<std::atomic<int>> hits(n);
    parallel_for(ex, n, [&](long i) { hits[static_cast<std::size_t>(i)]++; });
    for (long i = 0; i < n; ++i) CHECK(hits[static_cast<std::size_t>(i)].load() == 1);
    std::atomic<long> ran{0};
    parallel_for(ex, 0, [&](long) { ran++; });
    CHECK(ran.load() == 0);
  }
}

TEST_CASE("matrix inversion agrees across lanes") {
  const HopfAlgebra h = group_algebra(*find_builtin("D4"));
  Mor m = braiding(BraidingKind::Flip, h.carrier, h.carrier);
  m.set(0, 5, Scalar(1, 3));
  m.set(7, 2, Scalar(-2, 9));
  const Mor a = invert(m, Exec::Serial);
  const Mor b = invert(m, Exec::Parallel);
  CHECK(mor_equal(a, b));
  CHECK(mor_equal(compose(a, m), identity(m.dom)));
}

TEST_CASE("linear solving agrees across lanes including rank reports") {
  // square singular system: both lanes must refuse identically
  const std::vector<Mor::Row> a = {
      {{0, Scalar(1)}},
      {{1, Scalar(1)}},
      {{0, Scalar(1)}},  // rows 0 and 2 identical
  };
  const std::vector<std::vector<Scalar>> b = {{Scalar(1)}, {Scalar(0)}, {Scalar(0)}};
  const SolveOutcome s1 = solve_exact(3, a, b, Exec::Serial);
  const SolveOutcome s2 = solve_exact(3, a, b, Exec::Parallel);
  CHECK(s1.ok == s2.ok);
  CHECK(s1.rank == s2.rank);
  CHECK(!s1.ok);
  CHECK(s1.rank == 2);
}

TEST_CASE("convolution inversion agrees across lanes") {
  const PostHopfAlgebra& p = corpus::sample_post();
  const Mor alpha = alpha_of(p.hopf, p.m);
  const ConvolutionContext ctx{p.hopf.coalgebra(), dual_pair_algebra(p.hopf.carrier)};
  const Mor b1 = convolution_inverse(ctx, alpha, Exec::Serial);
  const Mor b2 = convolution_inverse(ctx, alpha, Exec::Parallel);
  CHECK(mor_equal(b1, b2));
  CHECK(mor_equal(b1, p.beta()));
}

TEST_CASE("skew-brace enumeration agrees across lanes") {
  for (const char* name : {"C4", "C2xC2", "S3"}) {
    const FiniteGroup& g = *find_builtin(name);
    const auto a = enumerate_skew_braces(g, 6, Exec::Serial);
    const auto b = enumerate_skew_braces(g, 6, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].dot.table == b[i].dot.table);
      CHECK(a[i].circ.table == b[i].circ.table);
    }
  }
}

TEST_CASE("checkers and functors agree across lanes") {
  const PostHopfAlgebra& p = corpus::corpus().posts.back();
  const Report r1 = check_post_hopf(p, Exec::Serial);
  const Report r2 = check_post_hopf(p, Exec::Parallel);
  CHECK(r1.all_pass());
  CHECK(r2.all_pass());
  REQUIRE(r1.clauses.size() == r2.clauses.size());
  for (std::size_t i = 0; i < r1.clauses.size(); ++i)
    CHECK(r1.clauses[i].key == r2.clauses[i].key);

  const BraceTriple& t = corpus::sample_triple();
  CHECK(mor_equal(functor_P(t, Exec::Serial).m, functor_P(t, Exec::Parallel).m));
  CHECK(mor_equal(beta_closed_form(t, Exec::Serial), beta_closed_form(t, Exec::Parallel)));
  const SHopfBraceWitness w1 = functor_Q(functor_P(t, Exec::Serial), Exec::Serial);
  const SHopfBraceWitness w2 = functor_Q(functor_P(t, Exec::Parallel), Exec::Parallel);
  CHECK(mor_equal(w1.brace.mul2, w2.brace.mul2));
  CHECK(mor_equal(w1.lambda2_inv, w2.lambda2_inv));
}
