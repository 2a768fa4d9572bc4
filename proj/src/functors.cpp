#include "hb/functors.hpp"

#include <utility>

#include "hb/error.hpp"
#include "hb/linalg.hpp"

namespace hb {

bool RoundTripReport::identity() const {
  for (const FieldCmp& f : fields)
    if (!f.equal) return false;
  return true;
}

namespace {

void cmp(RoundTripReport& r, const std::string& name, const Mor& a, const Mor& b) {
  FieldCmp f{name, mor_equal(a, b), std::nullopt};
  if (!f.equal && a.dom == b.dom && a.cod == b.cod) f.diff = sub(a, b);
  r.fields.push_back(std::move(f));
}

void cmp_triple(RoundTripReport& r, const BraceTriple& a, const BraceTriple& b) {
  cmp(r, "eta", a.hopf.unit, b.hopf.unit);
  cmp(r, "mu", a.hopf.mul, b.hopf.mul);
  cmp(r, "eps", a.hopf.counit, b.hopf.counit);
  cmp(r, "delta", a.hopf.comul, b.hopf.comul);
  cmp(r, "lambda", a.hopf.antipode, b.hopf.antipode);
  cmp(r, "gamma", a.gamma, b.gamma);
  cmp(r, "T", a.T, b.T);
}

void cmp_brace(RoundTripReport& r, const HopfBrace& a, const HopfBrace& b) {
  cmp(r, "eta1", a.unit1, b.unit1);
  cmp(r, "mu1", a.mul1, b.mul1);
  cmp(r, "lambda1", a.antipode1, b.antipode1);
  cmp(r, "eta2", a.unit2, b.unit2);
  cmp(r, "mu2", a.mul2, b.mul2);
  cmp(r, "lambda2", a.antipode2, b.antipode2);
  cmp(r, "eps", a.counit, b.counit);
  cmp(r, "delta", a.comul, b.comul);
}

void cmp_post(RoundTripReport& r, const PostHopfAlgebra& a, const PostHopfAlgebra& b) {
  cmp(r, "eta", a.hopf.unit, b.hopf.unit);
  cmp(r, "mu", a.hopf.mul, b.hopf.mul);
  cmp(r, "eps", a.hopf.counit, b.hopf.counit);
  cmp(r, "delta", a.hopf.comul, b.hopf.comul);
  cmp(r, "lambda", a.hopf.antipode, b.hopf.antipode);
  cmp(r, "m", a.m, b.m);
}

}  // namespace

SHopfBraceWitness functor_F(const BraceTriple& t, Exec ex) {
  Report chk = check_brace_triple(t);
  if (!chk.all_pass())
    throw InvalidInput("functor_F: input fails brace-triple clauses: " + chk.failing_keys());
  HopfBrace b;
  b.carrier = t.hopf.carrier;
  b.braid = t.hopf.braid;
  b.counit = t.hopf.counit;
  b.comul = t.hopf.comul;
  b.unit1 = t.hopf.unit;
  b.mul1 = t.hopf.mul;
  b.antipode1 = t.hopf.antipode;
  b.unit2 = t.hopf.unit;
  b.mul2 = mu_bt(t);
  b.antipode2 = t.T;
  return {std::move(b), invert(t.hopf.antipode, ex), invert(t.T, ex)};
}

BraceTriple functor_G(const SHopfBraceWitness& w) {
  Report chk = check_s_hopf_brace(w);
  if (!chk.all_pass())
    throw InvalidInput("functor_G: input fails s-Hopf-brace clauses: " + chk.failing_keys());
  return {w.brace.first(), gamma_of_brace(w.brace), w.brace.antipode2};
}

PostHopfAlgebra functor_P(const BraceTriple& t, Exec ex) {
  Report chk = check_brace_triple(t);
  if (!chk.all_pass())
    throw InvalidInput("functor_P: input fails brace-triple clauses: " + chk.failing_keys());
  return PostHopfAlgebra(t.hopf, t.gamma, beta_closed_form(t, ex));
}

SHopfBraceWitness functor_Q(const PostHopfAlgebra& p, Exec ex) {
  Report php = check_post_hopf(p, ex);
  if (!php.all_pass())
    throw InvalidInput("functor_Q: input fails post-Hopf clauses: " + php.failing_keys());
  Report coc = check_cocommutative(p.hopf);
  if (!coc.all_pass())
    throw InvalidInput("functor_Q: carrier is not cocommutative: " + coc.failing_keys());
  Report star = check_star_condition(p, ex);
  if (!star.all_pass())
    throw StarConditionFailed("functor_Q: star condition fails: " + star.failing_keys());
  HopfBrace b;
  b.carrier = p.hopf.carrier;
  b.braid = p.hopf.braid;
  b.counit = p.hopf.counit;
  b.comul = p.hopf.comul;
  b.unit1 = p.hopf.unit;
  b.mul1 = p.hopf.mul;
  b.antipode1 = p.hopf.antipode;
  b.unit2 = p.hopf.unit;
  b.mul2 = mu_hat(p);
  b.antipode2 = lambda_hat(p, ex);
  Mor l2inv = invert(b.antipode2, ex);
  return {std::move(b), invert(p.hopf.antipode, ex), std::move(l2inv)};
}

RoundTripReport roundtrip_GF(const BraceTriple& t, Exec ex) {
  RoundTripReport r;
  r.direction = "G∘F";
  cmp_triple(r, functor_G(functor_F(t, ex)), t);
  return r;
}

RoundTripReport roundtrip_FG(const SHopfBraceWitness& w, Exec ex) {
  RoundTripReport r;
  r.direction = "F∘G";
  cmp_brace(r, functor_F(functor_G(w), ex).brace, w.brace);
  return r;
}

RoundTripReport roundtrip_PGQ(const PostHopfAlgebra& p, Exec ex) {
  RoundTripReport r;
  r.direction = "P'∘(G''∘Q)";
  cmp_post(r, functor_P(functor_G(functor_Q(p, ex)), ex), p);
  return r;
}

RoundTripReport roundtrip_QGP(const BraceTriple& t, Exec ex) {
  RoundTripReport r;
  r.direction = "(G''∘Q)∘P'";
  cmp_triple(r, functor_G(functor_Q(functor_P(t, ex), ex)), t);
  return r;
}

}  // namespace hb
