#include "hb/convolution.hpp"

#include <map>

#include "hb/error.hpp"

namespace hb {

Mor convolve(const ConvolutionContext& ctx, const Mor& f, const Mor& g) {
  return chain({ctx.target.mul, tensor(f, g), ctx.source.comul});
}

Mor convolution_inverse(const ConvolutionContext& ctx, const Mor& f, Exec ex) {
  const Obj& d = ctx.source.carrier;
  const Obj& a = ctx.target.carrier;
  if (f.dom != d || f.cod != a)
    throw DomainMismatch("convolution_inverse: f is " + obj_label(f.dom) + " -> " +
                         obj_label(f.cod) + ", want " + obj_label(d) + " -> " + obj_label(a));
  const int nd = d.dim, na = a.dim, big = na * nd;

  // Unknown x[(b,q)] = g[b][q] for the candidate inverse g : D -> A.
  // Equation (s,j):  sum_{a,b,p,q} mul[s][(a,b)] f[a][p] comul[(p,q)][j] x[(b,q)]
  //                    = (unit_A . counit_D)[s][j].
  std::vector<std::map<int, Scalar>> coeff(static_cast<std::size_t>(big));
  for (int s = 0; s < na; ++s)
    for (const auto& [ab, mval] : ctx.target.mul.rows[static_cast<std::size_t>(s)]) {
      const int ai = ab / na, bi = ab % na;
      for (const auto& [p, fval] : f.rows[static_cast<std::size_t>(ai)]) {
        const Scalar base = mval * fval;
        for (int q = 0; q < nd; ++q)
          for (const auto& [j, dval] :
               ctx.source.comul.rows[static_cast<std::size_t>(p) * nd + q]) {
            Scalar& slot = coeff[static_cast<std::size_t>(s) * nd + j][bi * nd + q];
            slot += base * dval;
          }
      }
    }

  std::vector<Mor::Row> sys(static_cast<std::size_t>(big));
  for (int r = 0; r < big; ++r)
    for (auto& [c, v] : coeff[static_cast<std::size_t>(r)])
      if (!v.is_zero()) sys[static_cast<std::size_t>(r)].push_back({c, v});

  const Mor one = ctx.unit();
  std::vector<std::vector<Scalar>> rhs(static_cast<std::size_t>(big),
                                       std::vector<Scalar>(1, Scalar(0)));
  for (int s = 0; s < na; ++s)
    for (const auto& [j, v] : one.rows[static_cast<std::size_t>(s)])
      rhs[static_cast<std::size_t>(s) * nd + j][0] = v;

  SolveOutcome sol = solve_exact(big, sys, rhs, ex);
  if (!sol.ok)
    throw NotInvertible("convolution inverse: system rank " + std::to_string(sol.rank) + " of " +
                        std::to_string(big), sol.rank, big);

  Mor g(d, a);
  for (int b = 0; b < na; ++b)
    for (int q = 0; q < nd; ++q) {
      const Scalar& v = sol.x[static_cast<std::size_t>(b) * nd + q][0];
      if (!v.is_zero()) g.rows[static_cast<std::size_t>(b)].push_back({q, v});
    }

  if (!mor_equal(convolve(ctx, f, g), one))
    throw InternalInconsistency("convolution inverse: solved g fails f * g = unit");
  if (!mor_equal(convolve(ctx, g, f), one))
    throw InternalInconsistency("convolution inverse: right inverse fails g * f = unit");
  return g;
}

Mor derive_antipode(const AlgebraStruct& alg, const CoalgebraStruct& coalg, Exec ex) {
  if (alg.carrier != coalg.carrier)
    throw InvalidInput("derive_antipode: algebra and coalgebra carriers differ");
  return convolution_inverse({coalg, alg}, identity(coalg.carrier), ex);
}

}  // namespace hb
