#include "hb/groups.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hb/error.hpp"

namespace hb {

namespace {

bool find_identity(const std::vector<std::vector<int>>& t, int n, int* e_out) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = t[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] == j &&
           t[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] == j;
    if (ok) {
      if (e_out) *e_out = e;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_group_table(const std::vector<std::vector<int>>& t, int* e_out) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  // Latin square
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) seen[static_cast<std::size_t>(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  int e = -1;
  if (!find_identity(t, n, &e)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t[static_cast<std::size_t>(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])][static_cast<std::size_t>(k)] !=
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])])
          return false;
  if (e_out) *e_out = e;
  return true;
}

FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table) {
  int e = -1;
  if (!is_group_table(table, &e))
    throw InvalidInput("make_group: '" + name + "' is not a group table");
  FiniteGroup g;
  g.name = std::move(name);
  g.n = static_cast<int>(table.size());
  g.table = std::move(table);
  g.e = e;
  g.inv.assign(static_cast<std::size_t>(g.n), -1);
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j)
      if (g.mul(i, j) == e) {
        if (g.mul(j, i) != e)
          throw InvalidInput("make_group: '" + g.name + "' has a one-sided inverse");
        g.inv[static_cast<std::size_t>(i)] = j;
        break;
      }
    if (g.inv[static_cast<std::size_t>(i)] < 0)
      throw InvalidInput("make_group: '" + g.name + "' misses an inverse");
  }
  return g;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> result;
  std::vector<int> p(static_cast<std::size_t>(g.n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.n && ok; ++i)
      for (int j = 0; j < g.n && ok; ++j)
        ok = p[static_cast<std::size_t>(g.mul(i, j))] ==
             g.mul(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    if (ok) result.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

namespace {

FiniteGroup cyclic(int n, std::string name) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return make_group(std::move(name), std::move(t));
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          a.mul(i / b.n, j / b.n) * b.n + b.mul(i % b.n, j % b.n);
  return make_group(std::move(name), std::move(t));
}

FiniteGroup from_perms(const std::vector<std::vector<int>>& perms, std::string name) {
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    for (int k = 0; k < n; ++k)
      if (perms[static_cast<std::size_t>(k)] == q) return k;
    throw InvalidInput("from_perms: composition left the set");
  };
  const int deg = static_cast<int>(perms.front().size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> comp(static_cast<std::size_t>(deg));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < deg; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(comp);
    }
  return make_group(std::move(name), std::move(t));
}

FiniteGroup sym3() {
  // all permutations of {0,1,2} in lexicographic one-line order
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_perms(perms, "S3");
}

FiniteGroup dihedral4() {
  // r^a s^b acting on square vertices: x -> (b ? a - x : a + x) mod 4,
  // element index a + 4b
  std::vector<std::vector<int>> perms;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 4; ++a) {
      std::vector<int> p(4);
      for (int x = 0; x < 4; ++x) p[static_cast<std::size_t>(x)] = ((b ? a - x : a + x) % 4 + 4) % 4;
      perms.push_back(std::move(p));
    }
  return from_perms(perms, "D4");
}

FiniteGroup quaternion8() {
  // {1,-1,i,-i,j,-j,k,-k}, index 2u + (sign<0), units u in {1,i,j,k}
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  // sign table: row u, col v, for u*v: i*i=-1, i*j=+k, i*k=-j, j*i=-k,
  // j*j=-1, j*k=+i, k*i=+j, k*j=-i, k*k=-1
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, su = x % 2 ? -1 : 1;
      const int v = y / 2, sv = y % 2 ? -1 : 1;
      const int w = unit[u][v];
      const int s = su * sv * sign[u][v];
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * w + (s < 0 ? 1 : 0);
    }
  return make_group("Q8", std::move(t));
}

}  // namespace

const std::vector<FiniteGroup>& builtin_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> gs;
    gs.push_back(cyclic(1, "C1"));
    gs.push_back(cyclic(2, "C2"));
    gs.push_back(cyclic(3, "C3"));
    gs.push_back(cyclic(4, "C4"));
    gs.push_back(cyclic(5, "C5"));
    gs.push_back(cyclic(6, "C6"));
    gs.push_back(product(cyclic(2, "C2"), cyclic(2, "C2"), "C2xC2"));
    gs.push_back(sym3());
    gs.push_back(cyclic(8, "C8"));
    gs.push_back(dihedral4());
    gs.push_back(quaternion8());
    gs.push_back(product(cyclic(2, "C2"), cyclic(4, "C4"), "C2xC4"));
    gs.push_back(product(cyclic(2, "C2"), product(cyclic(2, "C2"), cyclic(2, "C2"), "C2xC2"),
                         "C2xC2xC2"));
    return gs;
  }();
  return groups;
}

const FiniteGroup* find_builtin(const std::string& name) {
  for (const FiniteGroup& g : builtin_groups())
    if (g.name == name) return &g;
  return nullptr;
}

namespace {

bool compat_law(const FiniteGroup& dot, const std::vector<std::vector<int>>& star) {
  const int n = dot.n;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int t = 0; t < n; ++t) {
        const int lhs = star[static_cast<std::size_t>(g)][static_cast<std::size_t>(dot.mul(h, t))];
        const int rhs = dot.mul(dot.mul(star[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)],
                                        dot.inv[static_cast<std::size_t>(g)]),
                                star[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)]);
        if (lhs != rhs) return false;
      }
  return true;
}

void sort_braces(std::vector<SkewBrace>& braces) {
  std::sort(braces.begin(), braces.end(),
            [](const SkewBrace& a, const SkewBrace& b) { return a.circ.table < b.circ.table; });
}

}  // namespace

Report check_skew_brace(const SkewBrace& s) {
  Report r{"skew_brace", {}};
  add_flag(r, "carrier", s.dot.n == s.circ.n,
           s.dot.n == s.circ.n ? "" : "carrier sizes differ");
  int edot = -1, ecirc = -1;
  const bool dg = is_group_table(s.dot.table, &edot);
  const bool cg = is_group_table(s.circ.table, &ecirc);
  add_flag(r, "dot.group", dg);
  add_flag(r, "circ.group", cg);
  add_flag(r, "same_identity", dg && cg && edot == ecirc);
  bool compat = false;
  if (dg && cg && s.dot.n == s.circ.n) compat = compat_law(s.dot, s.circ.table);
  add_flag(r, "compat(0.1)", compat);
  return r;
}

SkewBrace trivial_skew_brace(const FiniteGroup& g) {
  FiniteGroup circ = g;
  circ.name = g.name + ":triv";
  return {g, std::move(circ)};
}

SkewBrace opposite_skew_brace(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(g.n),
                                  std::vector<int>(static_cast<std::size_t>(g.n)));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.mul(j, i);
  return {g, make_group(g.name + ":opp", std::move(t))};
}

std::vector<SkewBrace> enumerate_skew_braces(const FiniteGroup& g, int bound, Exec ex) {
  if (g.n > bound)
    throw BoundExceeded("enumerate_skew_braces: order " + std::to_string(g.n) + " exceeds bound " +
                        std::to_string(bound));
  const std::vector<std::vector<int>> auts = automorphisms(g);
  const long na = static_cast<long>(auts.size());
  std::vector<int> others;
  for (int i = 0; i < g.n; ++i)
    if (i != g.e) others.push_back(i);
  long total = 1;
  for (std::size_t k = 0; k < others.size(); ++k) total *= na;

  std::vector<std::vector<SkewBrace>> buckets(static_cast<std::size_t>(max_threads()));
  parallel_for(ex, total, [&](long idx) {
    // decode idx as the Aut-assignment for the non-identity elements
    std::vector<int> pick(others.size());
    long rest = idx;
    for (std::size_t k = 0; k < others.size(); ++k) {
      pick[k] = static_cast<int>(rest % na);
      rest /= na;
    }
    std::vector<std::vector<int>> star(static_cast<std::size_t>(g.n),
                                       std::vector<int>(static_cast<std::size_t>(g.n)));
    for (int j = 0; j < g.n; ++j) star[static_cast<std::size_t>(g.e)][static_cast<std::size_t>(j)] = j;
    for (std::size_t k = 0; k < others.size(); ++k) {
      const int i = others[k];
      const std::vector<int>& lam = auts[static_cast<std::size_t>(pick[k])];
      for (int j = 0; j < g.n; ++j)
        star[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            g.mul(i, lam[static_cast<std::size_t>(j)]);
    }
    int e2 = -1;
    if (!is_group_table(star, &e2) || e2 != g.e) return;
    if (!compat_law(g, star)) return;  // automatic for lambda-maps; re-verified
    SkewBrace s{g, make_group(g.name + ":#" + std::to_string(idx), star)};
    buckets[static_cast<std::size_t>(thread_id())].push_back(std::move(s));
  });

  std::vector<SkewBrace> all;
  for (auto& b : buckets)
    for (auto& s : b) all.push_back(std::move(s));
  sort_braces(all);
  all.erase(std::unique(all.begin(), all.end(),
                        [](const SkewBrace& a, const SkewBrace& b) {
                          return a.circ.table == b.circ.table;
                        }),
            all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    all[k].circ.name = g.name + ":*" + std::to_string(k);
  return all;
}

std::vector<SkewBrace> enumerate_skew_braces_direct(const FiniteGroup& g, int bound, Exec ex) {
  if (g.n > bound)
    throw BoundExceeded("enumerate_skew_braces_direct: order " + std::to_string(g.n) +
                        " exceeds bound " + std::to_string(bound));
  const int n = g.n;
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != g.e) others.push_back(i);
  // all permutations of n-1 symbols, lexicographic
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(others.size());
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  const long np = static_cast<long>(perms.size());
  long total = 1;
  for (std::size_t k = 0; k < others.size(); ++k) total *= np;

  std::vector<std::vector<SkewBrace>> buckets(static_cast<std::size_t>(max_threads()));
  parallel_for(ex, total, [&](long idx) {
    std::vector<std::vector<int>> star(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) star[static_cast<std::size_t>(g.e)][static_cast<std::size_t>(j)] = j;
    long rest = idx;
    for (std::size_t k = 0; k < others.size(); ++k) {
      const int i = others[k];
      const std::vector<int>& pm = perms[static_cast<std::size_t>(rest % np)];
      rest /= np;
      // row i: e -> i, the other columns biject onto the values != i
      std::vector<int> vals;
      for (int v = 0; v < n; ++v)
        if (v != i) vals.push_back(v);
      star[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.e)] = i;
      for (std::size_t c = 0; c < others.size(); ++c)
        star[static_cast<std::size_t>(i)][static_cast<std::size_t>(others[c])] =
            vals[static_cast<std::size_t>(pm[c])];
    }
    int e2 = -1;
    if (!is_group_table(star, &e2) || e2 != g.e) return;
    if (!compat_law(g, star)) return;
    SkewBrace s{g, make_group(g.name + ":#" + std::to_string(idx), star)};
    buckets[static_cast<std::size_t>(thread_id())].push_back(std::move(s));
  });

  std::vector<SkewBrace> all;
  for (auto& b : buckets)
    for (auto& s : b) all.push_back(std::move(s));
  sort_braces(all);
  for (std::size_t k = 0; k < all.size(); ++k)
    all[k].circ.name = g.name + ":*" + std::to_string(k);
  return all;
}

HopfAlgebra group_algebra(const FiniteGroup& g, BraidingKind braid) {
  if (braid != BraidingKind::Flip)
    throw InvalidInput("group_algebra: group algebras are ungraded, use Flip");
  const int n = g.n;
  HopfAlgebra h;
  h.carrier = Obj{n, std::nullopt, "H"};
  h.braid = braid;
  h.unit = Mor(unit_obj(), h.carrier);
  h.unit.rows[static_cast<std::size_t>(g.e)].push_back({0, Scalar(1)});
  h.mul = Mor(tensor_obj(h.carrier, h.carrier), h.carrier);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.mul.rows[static_cast<std::size_t>(g.mul(i, j))].push_back({i * n + j, Scalar(1)});
  h.counit = Mor(h.carrier, unit_obj());
  for (int j = 0; j < n; ++j) h.counit.rows[0].push_back({j, Scalar(1)});
  h.comul = Mor(h.carrier, tensor_obj(h.carrier, h.carrier));
  for (int j = 0; j < n; ++j)
    h.comul.rows[static_cast<std::size_t>(j) * n + j].push_back({j, Scalar(1)});
  h.antipode = Mor(h.carrier, h.carrier);
  for (int j = 0; j < n; ++j)
    h.antipode.rows[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(j)])].push_back(
        {j, Scalar(1)});
  return h;
}

HopfBrace hopf_brace_from_skew_brace(const SkewBrace& s) {
  Report chk = check_skew_brace(s);
  if (!chk.all_pass())
    throw InvalidSkewBrace("hopf_brace_from_skew_brace: " + chk.failing_keys());
  const HopfAlgebra h1 = group_algebra(s.dot);
  const HopfAlgebra h2 = group_algebra(s.circ);
  HopfBrace b;
  b.carrier = h1.carrier;
  b.braid = h1.braid;
  b.counit = h1.counit;
  b.comul = h1.comul;
  b.unit1 = h1.unit;
  b.mul1 = h1.mul;
  b.antipode1 = h1.antipode;
  b.unit2 = h2.unit;
  b.mul2 = h2.mul;
  b.antipode2 = h2.antipode;
  return b;
}

HopfAlgebra super_line() {
  HopfAlgebra h;
  h.carrier = Obj{2, std::vector<std::uint8_t>{0, 1}, "H"};
  h.braid = BraidingKind::GradedFlip;
  h.unit = Mor(unit_obj(), h.carrier);
  h.unit.rows[0].push_back({0, Scalar(1)});
  // basis (1, x):  1.1 = 1, 1.x = x.1 = x, x.x = 0
  h.mul = Mor(tensor_obj(h.carrier, h.carrier), h.carrier);
  h.mul.rows[0].push_back({0, Scalar(1)});
  h.mul.rows[1].push_back({1, Scalar(1)});
  h.mul.rows[1].push_back({2, Scalar(1)});
  h.counit = Mor(h.carrier, unit_obj());
  h.counit.rows[0].push_back({0, Scalar(1)});
  // comul(1) = 1 (x) 1,  comul(x) = x (x) 1 + 1 (x) x
  h.comul = Mor(h.carrier, tensor_obj(h.carrier, h.carrier));
  h.comul.rows[0].push_back({0, Scalar(1)});
  h.comul.rows[1].push_back({1, Scalar(1)});
  h.comul.rows[2].push_back({1, Scalar(1)});
  h.antipode = Mor(h.carrier, h.carrier);
  h.antipode.rows[0].push_back({0, Scalar(1)});
  h.antipode.rows[1].push_back({1, Scalar(-1)});
  return h;
}

}  // namespace hb
