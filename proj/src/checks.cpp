#include "hb/checks.hpp"

#include <utility>

#include "hb/error.hpp"

namespace hb {

Report check_algebra(const AlgebraStruct& a) {
  Report r{"algebra", {}};
  const Mor i = identity(a.carrier);
  // mul . (unit (x) A) = id = mul . (A (x) unit)
  add_eq(r, "alg.unit_left", [&] { return std::pair{chain({a.mul, tensor(a.unit, i)}), i}; });
  add_eq(r, "alg.unit_right", [&] { return std::pair{chain({a.mul, tensor(i, a.unit)}), i}; });
  // mul . (A (x) mul) = mul . (mul (x) A)
  add_eq(r, "alg.assoc", [&] {
    return std::pair{chain({a.mul, tensor(i, a.mul)}), chain({a.mul, tensor(a.mul, i)})};
  });
  return r;
}

Report check_coalgebra(const CoalgebraStruct& d) {
  Report r{"coalgebra", {}};
  const Mor i = identity(d.carrier);
  // (counit (x) D) . comul = id = (D (x) counit) . comul
  add_eq(r, "coalg.counit_left",
         [&] { return std::pair{chain({tensor(d.counit, i), d.comul}), i}; });
  add_eq(r, "coalg.counit_right",
         [&] { return std::pair{chain({tensor(i, d.counit), d.comul}), i}; });
  // (comul (x) D) . comul = (D (x) comul) . comul
  add_eq(r, "coalg.coassoc", [&] {
    return std::pair{chain({tensor(d.comul, i), d.comul}), chain({tensor(i, d.comul), d.comul})};
  });
  return r;
}

Report check_bialgebra(const AlgebraStruct& a, const CoalgebraStruct& d, BraidingKind braid) {
  if (a.carrier != d.carrier)
    throw InvalidInput("check_bialgebra: algebra and coalgebra carriers differ");
  Report r = check_algebra(a);
  r.subject = "bialgebra";
  Report rc = check_coalgebra(d);
  for (Clause& c : rc.clauses) r.clauses.push_back(std::move(c));

  const Obj& h = a.carrier;
  const Mor i = identity(h);
  auto c = [&] { return braiding(braid, h, h); };
  // comul . mul = (mul (x) mul) . (H (x) c (x) H) . (comul (x) comul)
  add_eq(r, "bialg.mul_comul", [&] {
    return std::pair{compose(d.comul, a.mul),
                     chain({tensor(a.mul, a.mul), tens({i, c(), i}), tensor(d.comul, d.comul)})};
  });
  add_eq(r, "bialg.unit_comul",
         [&] { return std::pair{compose(d.comul, a.unit), tensor(a.unit, a.unit)}; });
  add_eq(r, "bialg.mul_counit",
         [&] { return std::pair{compose(d.counit, a.mul), tensor(d.counit, d.counit)}; });
  add_eq(r, "bialg.unit_counit",
         [&] { return std::pair{compose(d.counit, a.unit), identity(unit_obj())}; });
  return r;
}

Report check_hopf(const HopfAlgebra& h) {
  Report r = check_bialgebra(h.algebra(), h.coalgebra(), h.braid);
  r.subject = "hopf";
  const Mor i = identity(h.carrier);
  const Mor conv_unit = compose(h.unit, h.counit);
  auto c = [&] { return h.braid_cc(); };
  // mul . (antipode (x) H) . comul = unit . counit = mul . (H (x) antipode) . comul
  add_eq(r, "hopf.antipode_left", [&] {
    return std::pair{chain({h.mul, tensor(h.antipode, i), h.comul}), conv_unit};
  });
  add_eq(r, "hopf.antipode_right", [&] {
    return std::pair{chain({h.mul, tensor(i, h.antipode), h.comul}), conv_unit};
  });
  // antipode . mul = mul . (antipode (x) antipode) . c
  add_eq(r, "eq(1.3).mul", [&] {
    return std::pair{compose(h.antipode, h.mul),
                     chain({h.mul, tensor(h.antipode, h.antipode), c()})};
  });
  // comul . antipode = c . (antipode (x) antipode) . comul
  add_eq(r, "eq(1.3).comul", [&] {
    return std::pair{compose(h.comul, h.antipode),
                     chain({c(), tensor(h.antipode, h.antipode), h.comul})};
  });
  add_eq(r, "eq(1.4).unit", [&] { return std::pair{compose(h.antipode, h.unit), h.unit}; });
  add_eq(r, "eq(1.4).counit", [&] { return std::pair{compose(h.counit, h.antipode), h.counit}; });

  bool com = false, cocom = false;
  try {
    const Mor cc = c();
    com = mor_equal(compose(h.mul, cc), h.mul);
    cocom = mor_equal(compose(cc, h.comul), h.comul);
  } catch (const Error&) {
    // braiding unavailable; the bialgebra clauses already flag that
  }
  if (com || cocom)
    add_eq(r, "hopf.antipode_involutive",
           [&] { return std::pair{compose(h.antipode, h.antipode), i}; });
  return r;
}

Report check_cocommutative(const HopfAlgebra& h) {
  Report r{"cocommutative", {}};
  auto c = [&] { return h.braid_cc(); };
  add_eq(r, "cocom", [&] { return std::pair{compose(c(), h.comul), h.comul}; });
  add_eq(r, "eq(1.8)", [&] {
    const Mor cc = c();
    return std::pair{compose(cc, cc), identity(tensor_obj(h.carrier, h.carrier))};
  });
  return r;
}

namespace {

// (act (x) act) . (X (x) c_{X,M} (x) M) . (comul_X (x) M (x) M) : X(x)M(x)M -> M(x)M
Mor double_action(const HopfAlgebra& x, const Obj& m, const Mor& act) {
  const Mor im = identity(m);
  return chain({tensor(act, act), tens({identity(x.carrier), braiding(x.braid, x.carrier, m), im}),
                tens({x.comul, im, im})});
}

}  // namespace

Report check_module_algebra(const HopfAlgebra& x, const AlgebraStruct& a, const Mor& act) {
  Report r{"module_algebra", {}};
  const Mor ix = identity(x.carrier);
  const Mor ia = identity(a.carrier);
  // act . (unit_X (x) A) = id,  act . (X (x) act) = act . (mul_X (x) A)
  add_eq(r, "mod.unit", [&] { return std::pair{chain({act, tensor(x.unit, ia)}), ia}; });
  add_eq(r, "mod.assoc", [&] {
    return std::pair{chain({act, tensor(ix, act)}), chain({act, tensor(x.mul, ia)})};
  });
  // act . (X (x) unit_A) = counit_X (x) unit_A
  add_eq(r, "eq(1.5).unit",
         [&] { return std::pair{chain({act, tensor(ix, a.unit)}), tensor(x.counit, a.unit)}; });
  // act . (X (x) mul_A) = mul_A . double_action
  add_eq(r, "eq(1.5).mul", [&] {
    return std::pair{chain({act, tensor(ix, a.mul)}),
                     compose(a.mul, double_action(x, a.carrier, act))};
  });
  // consequence of the measuring + coalgebra-morphism hypotheses
  add_eq(r, "thm(1.7)",
         [&] { return std::pair{chain({act, tensor(ix, a.unit)}), tensor(x.counit, a.unit)}; });
  return r;
}

Report check_module_coalgebra(const HopfAlgebra& x, const CoalgebraStruct& d, const Mor& act) {
  Report r{"module_coalgebra", {}};
  const Mor ix = identity(x.carrier);
  const Mor id = identity(d.carrier);
  add_eq(r, "mod.unit", [&] { return std::pair{chain({act, tensor(x.unit, id)}), id}; });
  add_eq(r, "mod.assoc", [&] {
    return std::pair{chain({act, tensor(ix, act)}), chain({act, tensor(x.mul, id)})};
  });
  // counit_D . act = counit_X (x) counit_D
  add_eq(r, "eq(1.6).counit",
         [&] { return std::pair{compose(d.counit, act), tensor(x.counit, d.counit)}; });
  // comul_D . act = double_action . (X (x) comul_D)
  add_eq(r, "eq(1.6).comul", [&] {
    return std::pair{compose(d.comul, act),
                     chain({double_action(x, d.carrier, act), tensor(ix, d.comul)})};
  });
  return r;
}

}  // namespace hb
