#pragma once

#include <memory>
#include <mutex>

#include "hb/checks.hpp"
#include "hb/convolution.hpp"
#include "hb/report.hpp"
#include "hb/structures.hpp"

namespace hb {

// Hopf brace: two Hopf structures sharing the carrier and the coalgebra.
// The units are stored separately so that the unit-coincidence axiom is a
// checkable clause rather than a storage constraint.
struct HopfBrace {
  Obj carrier;
  BraidingKind braid = BraidingKind::Flip;
  Mor counit, comul;
  Mor unit1, mul1, antipode1;
  Mor unit2, mul2, antipode2;

  HopfAlgebra first() const {
    return {carrier, braid, unit1, mul1, counit, comul, antipode1, std::nullopt};
  }
  HopfAlgebra second() const {
    return {carrier, braid, unit2, mul2, counit, comul, antipode2, std::nullopt};
  }
};

// Brace triple: a Hopf algebra with invertible antipode, an action-like map
// gamma : H (x) H -> H and a twist T : H -> H.
struct BraceTriple {
  HopfAlgebra hopf;
  Mor gamma;
  Mor T;
};

// s-Hopf brace: a Hopf brace together with explicit two-sided inverses of
// both antipodes (the checker verifies the witnesses, it never solves).
struct SHopfBraceWitness {
  HopfBrace brace;
  Mor lambda1_inv, lambda2_inv;
};

// Post-Hopf algebra: finite Hopf algebra with m : H (x) H -> H subject to
// the Def4.1(...) clauses of check_post_hopf.  beta (the convolution
// inverse of alpha in Hom(H, H* (x) H)) is computed once on demand and
// cached; functor P seeds the cache with the closed form.
class PostHopfAlgebra {
 public:
  HopfAlgebra hopf;
  Mor m;

  PostHopfAlgebra() = default;
  PostHopfAlgebra(HopfAlgebra hopf_, Mor m_) : hopf(std::move(hopf_)), m(std::move(m_)) {}
  PostHopfAlgebra(HopfAlgebra hopf_, Mor m_, Mor beta_known)
      : hopf(std::move(hopf_)), m(std::move(m_)),
        beta_(std::make_shared<const Mor>(std::move(beta_known))) {}

  PostHopfAlgebra(const PostHopfAlgebra& o);
  PostHopfAlgebra& operator=(const PostHopfAlgebra& o);

  // Cached convolution inverse of alpha.  Throws NotInvertible when the
  // system is singular.
  const Mor& beta(Exec ex = default_exec()) const;
  bool beta_cached() const;

 private:
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Mor> beta_;
};

// --- derived maps ------------------------------------------------------

// Gamma_{H_1} = mul1 . (antipode1 (x) mul2) . (comul (x) H) : H (x) H -> H.
Mor gamma_of_brace(const HopfBrace& b);

// mul^BT = mul . (H (x) gamma) . (comul (x) H) : H (x) H -> H.
Mor mu_bt(const BraceTriple& t);

// alpha = (H* (x) act) . (c_{H,H*} (x) H) . (H (x) coev_H) : H -> H* (x) H.
Mor alpha_of(const HopfAlgebra& h, const Mor& act);

// The algebra on H* (x) H with mul = H* (x) ev_H (x) H and unit = coev_H.
AlgebraStruct dual_pair_algebra(const Obj& x);

// beta of a brace triple in closed form: alpha_of(hopf, gamma) . T^{-1}.
Mor beta_closed_form(const BraceTriple& t, Exec ex = default_exec());

// mul-hat = mul . (H (x) m) . (comul (x) H) : H (x) H -> H.
Mor mu_hat(const PostHopfAlgebra& p);

// lambda-hat = (ev (x) H) . (c_{H*,H} (x) H) . (H* (x) c_{H,H}) . (beta (x)
// antipode) . comul.  When the carrier is cocommutative the short form
// (ev (x) H) . (antipode (x) beta) . comul is computed as well and must
// agree (InternalInconsistency otherwise).  Throws BetaUnavailable when
// beta cannot be obtained.
Mor lambda_hat(const PostHopfAlgebra& p, Exec ex = default_exec());

// beta-tilde = (ev (x) H) . (H (x) beta);  alpha-tilde likewise with alpha.
Mor beta_tilde(const PostHopfAlgebra& p, Exec ex = default_exec());
Mor alpha_tilde(const PostHopfAlgebra& p);

bool is_cocommutative(const HopfAlgebra& h);

// --- checkers (one clause per defining identity, definition order) -----

Report check_hopf_brace(const HopfBrace& b);
Report check_brace_triple(const BraceTriple& t);
Report check_s_hopf_brace(const SHopfBraceWitness& w);
Report check_post_hopf(const PostHopfAlgebra& p, Exec ex = default_exec());

// The (*) condition on beta-tilde plus its counit identity; for
// cocommutative carriers also the coalgebra-morphism identities of
// alpha-tilde.
Report check_star_condition(const PostHopfAlgebra& p, Exec ex = default_exec());

// The lambda-hat identity suite for cocommutative post-Hopf algebras
// satisfying (*): action recovery, both hat-convolution identities,
// counit/comul compatibility, involutivity.
Report check_lambda_hat(const PostHopfAlgebra& p, Exec ex = default_exec());

}  // namespace hb
