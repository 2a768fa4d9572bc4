#include <doctest.h>

#include <string>
#include <vector>

#include "corpus.hpp"
#include "hb/braiding.hpp"
#include "hb/error.hpp"
#include "hb/expr.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"
#include "hb/io.hpp"

using namespace hb;

namespace {

bool expr_eq(const MorExpr& x, const MorExpr& y) {
  if (x.kind != y.kind || x.a != y.a || x.b != y.b) return false;
  if ((x.lhs == nullptr) != (y.lhs == nullptr)) return false;
  if (x.lhs && !expr_eq(*x.lhs, *y.lhs)) return false;
  if ((x.rhs == nullptr) != (y.rhs == nullptr)) return false;
  if (x.rhs && !expr_eq(*x.rhs, *y.rhs)) return false;
  return true;
}

Mor eval_str(const std::string& s, const EvalEnv& env) { return eval_expr(*parse_expr(s), env); }

}  // namespace

TEST_CASE("canonical strings survive a parse/print round trip unchanged") {
  const std::vector<std::string> canonical = {
      "mu",
      "id[H]",
      "c[H,Hd]",
      "cinv[K,H]",
      "mu . delta",
      "mu . lambda ox id[H] . delta",
      "(mu . delta) ox eps",
      "mu . (delta . lambda)",
      "eps ox (eta ox mu)",
      "gamma . eta ox id[H]",
      "bH ox id[H] . id[H] ox aH",
      "c . id",  // id/c/cinv are ordinary names when no '[' follows
  };
  for (const std::string& s : canonical) CHECK(print_expr(*parse_expr(s)) == s);
}

TEST_CASE("printing normalizes whitespace and redundant parentheses") {
  CHECK(print_expr(*parse_expr("mu.delta   ox\teps")) == "mu . delta ox eps");
  CHECK(print_expr(*parse_expr("((mu) . (delta))")) == "mu . delta");
  CHECK(print_expr(*parse_expr("mu . (lambda ox id[H]) . delta")) ==
        "mu . lambda ox id[H] . delta");
  CHECK(print_expr(*parse_expr("a . b . c")) == "a . b . c");
  // explicit right association is preserved, not silently reassociated
  CHECK(print_expr(*parse_expr("a . (b . c)")) == "a . (b . c)");
  CHECK(print_expr(*parse_expr("a ox (b ox c)")) == "a ox (b ox c)");
}

TEST_CASE("parse(print(e)) rebuilds the identical tree") {
  for (const std::string& s : {"mu . lambda ox id[H] . delta", "(mu . delta) ox eps",
                               "a . (b . c)", "cinv[H,H] . c[H,H] ox id[K]"}) {
    const ExprPtr e = parse_expr(s);
    CHECK(expr_eq(*parse_expr(print_expr(*e)), *e));
  }
  // association flattens to the left by default
  CHECK(expr_eq(*parse_expr("a . b . c"), *parse_expr("(a . b) . c")));
  CHECK(!expr_eq(*parse_expr("a . b . c"), *parse_expr("a . (b . c)")));
}

TEST_CASE("syntax errors carry exact positions") {
  auto pos_of = [](const std::string& src) {
    try {
      parse_expr(src);
    } catch (const SyntaxError& e) {
      return std::pair<int, int>{e.line, e.col};
    }
    return std::pair<int, int>{-1, -1};
  };
  CHECK_THROWS_WITH_AS(parse_expr(""), "expected a morphism, got end of input at 1:1",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("mu ."), "expected a morphism, got end of input at 1:5",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr(")"), "expected a morphism, got ')' at 1:1", SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("mu delta"), "unexpected 'delta' at 1:4", SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("id["), "expected an object name, got end of input at 1:4",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("c[H]"), "expected ',', got ']' at 1:4", SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("id[H"), "expected ']', got end of input at 1:5", SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("(mu . delta"), "expected ')', got end of input at 1:12",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_expr("mu @ delta"), "unexpected character '@' at 1:4", SyntaxError);
  CHECK(pos_of("mu .\n  @") == std::pair<int, int>{2, 3});
}

TEST_CASE("evaluation matches direct morphism construction") {
  const HopfAlgebra h = group_algebra(*find_builtin("S3"));
  const EvalEnv env = env_for(to_file(h));
  CHECK(mor_equal(eval_str("mu . delta", env), compose(h.mul, h.comul)));
  CHECK(mor_equal(eval_str("eps ox eps", env), tensor(h.counit, h.counit)));
  CHECK(mor_equal(eval_str("id[H]", env), identity(env.objects.at("H"))));
  CHECK(mor_equal(eval_str("c[H,H]", env),
                  braiding(BraidingKind::Flip, env.objects.at("H"), env.objects.at("H"))));
  CHECK(mor_equal(eval_str("mu . mu ox id[H]", env),
                  compose(h.mul, tensor(h.mul, identity(h.carrier)))));
}

TEST_CASE("the antipode axiom evaluates to eta . eps on k[C2]") {
  const EvalEnv env = env_for(to_file(group_algebra(*find_builtin("C2"))));
  const Mor lhs = eval_str("mu . lambda ox id[H] . delta", env);
  CHECK(mor_equal(lhs, eval_str("eta . eps", env)));
  CHECK(lhs.at(0, 0) == Scalar(1));
  CHECK(lhs.at(0, 1) == Scalar(1));
  CHECK(lhs.at(1, 0) == Scalar(0));
  CHECK(lhs.at(1, 1) == Scalar(0));
}

TEST_CASE("dual generators satisfy the snake identities") {
  for (const char* g : {"C3", "S3"}) {
    const EvalEnv env = env_for(to_file(group_algebra(*find_builtin(g))));
    CHECK(mor_equal(eval_str("bH ox id[H] . id[H] ox aH", env),
                    identity(env.objects.at("H"))));
    CHECK(mor_equal(eval_str("id[Hd] ox bH . aH ox id[Hd]", env),
                    identity(env.objects.at("Hd"))));
  }
}

TEST_CASE("braiding generators: symmetry and inverse") {
  const EvalEnv env = env_for(to_file(group_algebra(*find_builtin("C3"))));
  const Obj hh = tensor_obj(env.objects.at("H"), env.objects.at("H"));
  CHECK(mor_equal(eval_str("c[H,H] . c[H,H]", env), identity(hh)));
  CHECK(mor_equal(eval_str("cinv[H,H]", env), eval_str("c[H,H]", env)));
  CHECK(mor_equal(eval_str("c[K,H] . c[H,K]", env), identity(env.objects.at("H"))));
}

TEST_CASE("the graded braiding is used for graded files") {
  const EvalEnv env = env_for(to_file(super_line(), "L"));
  const Mor c = eval_str("c[H,H]", env);
  CHECK(c.at(3, 3) == Scalar(-1));  // odd (x) odd picks up the sign
  CHECK(c.at(0, 0) == Scalar(1));
  CHECK(mor_equal(eval_str("c[H,H] . c[H,H]", env),
                  identity(tensor_obj(env.objects.at("H"), env.objects.at("H")))));
}

TEST_CASE("brace-triple environments bind gamma, T, alphaH, betaH") {
  const BraceTriple& t = corpus::sample_triple();
  const EvalEnv env = env_for(to_file(t));
  CHECK(mor_equal(eval_str("gamma", env), t.gamma));
  CHECK(mor_equal(eval_str("T", env), t.T));
  CHECK(mor_equal(eval_str("gamma . eta ox id[H]", env), identity(t.hopf.carrier)));
  CHECK(mor_equal(eval_str("alphaH", env), alpha_of(t.hopf, t.gamma)));
  CHECK(mor_equal(eval_str("betaH", env), beta_closed_form(t)));
}

TEST_CASE("post-hopf environments bind m, alphaH, betaH") {
  PostHopfAlgebra p = functor_P(corpus::sample_triple());
  const EvalEnv env = env_for(to_file(p));
  CHECK(mor_equal(eval_str("m", env), p.m));
  CHECK(mor_equal(eval_str("alphaH", env), alpha_of(p.hopf, p.m)));
  CHECK(mor_equal(eval_str("betaH", env), p.beta()));
  CHECK(mor_equal(eval_str("m . eta ox id[H]", env),
                  compose(p.m, tensor(p.hopf.unit, identity(p.hopf.carrier)))));
}

TEST_CASE("hopf-brace environments bind both structures and gamma") {
  const HopfBrace b = corpus::corpus().braces.back();
  const EvalEnv env = env_for(to_file(b));
  CHECK(mor_equal(eval_str("mu1", env), b.mul1));
  CHECK(mor_equal(eval_str("mu", env), b.mul1));
  CHECK(mor_equal(eval_str("mu2", env), b.mul2));
  CHECK(mor_equal(eval_str("lambda2", env), b.antipode2));
  CHECK(mor_equal(eval_str("gamma", env), gamma_of_brace(b)));
}

TEST_CASE("names outside the kind's environment are unbound") {
  const EvalEnv hopf_env = env_for(to_file(group_algebra(*find_builtin("C2"))));
  CHECK_THROWS_WITH_AS(eval_str("gamma", hopf_env), "unknown generator 'gamma' at 1:1",
                       UnknownGenerator);
  CHECK_THROWS_WITH_AS(eval_str("mu . frob", hopf_env), "unknown generator 'frob' at 1:6",
                       UnknownGenerator);
  CHECK_THROWS_WITH_AS(eval_str("id[X]", hopf_env), "unknown object 'X' at 1:1",
                       UnknownGenerator);
  const EvalEnv triple_env = env_for(to_file(corpus::corpus().triples.front()));
  CHECK_THROWS_AS(eval_str("m", triple_env), UnknownGenerator);
  CHECK_THROWS_AS(eval_str("mu2", triple_env), UnknownGenerator);
}

TEST_CASE("type mismatches report both object labels") {
  const EvalEnv env = env_for(to_file(group_algebra(*find_builtin("C2"))));
  CHECK_THROWS_WITH_AS(eval_str("delta . delta", env),
                       "cannot compose at 1:7: left expects H[dim 2], right produces "
                       "(HxH)[dim 4]",
                       TypeMismatch);
  CHECK_THROWS_AS(eval_str("mu . mu", env), TypeMismatch);
  CHECK_NOTHROW(eval_str("mu ox eps", env));  // tensor never mismatches
}
