#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "hb/checks.hpp"
#include "hb/error.hpp"
#include "hb/groups.hpp"

using namespace hb;

TEST_CASE("built-in tables are validated groups with the expected profile") {
  // order-2-element counts pin each isomorphism type without naming theory
  const std::vector<std::pair<std::string, std::pair<int, int>>> profile = {
      {"C1", {1, 0}},        {"C2", {2, 1}},  {"C3", {3, 0}},    {"C4", {4, 1}},
      {"C5", {5, 0}},        {"C6", {6, 1}},  {"C2xC2", {4, 3}}, {"S3", {6, 3}},
      {"C8", {8, 1}},        {"D4", {8, 5}},  {"Q8", {8, 1}},    {"C2xC4", {8, 3}},
      {"C2xC2xC2", {8, 7}},
  };
  CHECK(builtin_groups().size() == profile.size());
  for (const auto& [name, shape] : profile) {
    const FiniteGroup* g = find_builtin(name);
    REQUIRE(g != nullptr);
    CHECK(g->n == shape.first);
    CHECK(is_group_table(g->table));
    int involutions = 0;
    for (int i = 0; i < g->n; ++i) {
      CHECK(g->mul(i, g->inv[static_cast<std::size_t>(i)]) == g->e);
      if (i != g->e && g->mul(i, i) == g->e) ++involutions;
    }
    CHECK(involutions == shape.second);
  }
  CHECK(find_builtin("nope") == nullptr);
}

TEST_CASE("Q8 and D4 are non-abelian, the rest of order 8 are abelian") {
  auto abelian = [](const FiniteGroup& g) {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (g.mul(i, j) != g.mul(j, i)) return false;
    return true;
  };
  CHECK(!abelian(*find_builtin("Q8")));
  CHECK(!abelian(*find_builtin("D4")));
  CHECK(!abelian(*find_builtin("S3")));
  for (const char* n : {"C8", "C2xC4", "C2xC2xC2", "C6", "C2xC2"})
    CHECK(abelian(*find_builtin(n)));
}

TEST_CASE("make_group rejects non-groups") {
  CHECK_THROWS_AS(make_group("bad", {{0, 1}, {1, 1}}), InvalidInput);   // no inverse for 1
  CHECK_THROWS_AS(make_group("bad", {{1, 0}, {0, 0}}), InvalidInput);   // no identity row 0
  // associativity violation: a "random" latin square that is not a group
  CHECK_THROWS_AS(make_group("bad", {{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 3, 4, 0, 1},
                                     {3, 4, 1, 2, 0},
                                     {4, 2, 0, 1, 3}}),
                  InvalidInput);
  CHECK_THROWS_AS(make_group("bad", {{0, 1}, {1, 2}}), InvalidInput);   // out of range
  CHECK_THROWS_AS(make_group("bad", {}), InvalidInput);                 // empty
}

TEST_CASE("automorphism groups have the hand-checked orders") {
  const std::vector<std::pair<std::string, std::size_t>> orders = {
      {"C1", 1}, {"C2", 1}, {"C3", 2}, {"C4", 2}, {"C2xC2", 6}, {"C5", 4}, {"C6", 2}, {"S3", 6},
  };
  for (const auto& [name, want] : orders) {
    const FiniteGroup& g = *find_builtin(name);
    const auto auts = automorphisms(g);
    CHECK(auts.size() == want);
    // every returned map is a bijection fixing products
    for (const auto& p : auts) {
      bool hom = true;
      for (int i = 0; hom && i < g.n; ++i)
        for (int j = 0; hom && j < g.n; ++j)
          hom = p[static_cast<std::size_t>(g.mul(i, j))] ==
                g.mul(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
      CHECK(hom);
    }
  }
}

TEST_CASE("trivial and opposite families pass the brute-force compatibility check") {
  for (const FiniteGroup& g : builtin_groups()) {
    CHECK(check_skew_brace(trivial_skew_brace(g)).all_pass());
    CHECK(check_skew_brace(opposite_skew_brace(g)).all_pass());
  }
}

TEST_CASE("a crafted incompatible pair fails exactly compat(0.1)") {
  // dot = cyclic C4; circ = C4 relabeled through the non-automorphism (1 2):
  // both are groups with identity 0, but the compatibility law breaks
  const FiniteGroup dot = *find_builtin("C4");
  const FiniteGroup circ =
      make_group("C4-relabeled", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}});
  const SkewBrace s{dot, circ};
  const Report r = check_skew_brace(s);
  CHECK(!r.all_pass());
  CHECK(r.find("dot.group")->pass);
  CHECK(r.find("circ.group")->pass);
  CHECK(r.find("same_identity")->pass);
  CHECK(!r.find("compat(0.1)")->pass);
  CHECK_THROWS_AS(hopf_brace_from_skew_brace(s), InvalidSkewBrace);
}

TEST_CASE("enumeration: C1 has exactly the trivial skew brace") {
  const auto all = enumerate_skew_braces(*find_builtin("C1"));
  REQUIRE(all.size() == 1);
  CHECK(all[0].circ.table == all[0].dot.table);
}

TEST_CASE("enumeration always contains the trivial brace; opposite differs off-abelian") {
  for (const FiniteGroup& g : builtin_groups()) {
    if (g.n > 6) continue;
    const auto all = enumerate_skew_braces(g);
    const auto has = [&](const std::vector<std::vector<int>>& t) {
      return std::any_of(all.begin(), all.end(),
                         [&](const SkewBrace& s) { return s.circ.table == t; });
    };
    CHECK(has(g.table));  // trivial
    const SkewBrace opp = opposite_skew_brace(g);
    CHECK(has(opp.circ.table));
    if (g.name == "S3") CHECK(opp.circ.table != g.table);
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_skew_braces(*find_builtin("C2xC2"));
  const auto b = enumerate_skew_braces(*find_builtin("C2xC2"));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].circ.name == b[i].circ.name);
    CHECK(a[i].circ.table == b[i].circ.table);
  }
}

TEST_CASE("enumeration respects its bound") {
  CHECK_THROWS_AS(enumerate_skew_braces(*find_builtin("C8")), BoundExceeded);
  CHECK_THROWS_AS(enumerate_skew_braces_direct(*find_builtin("C5")), BoundExceeded);
  // raising the bound explicitly is allowed
  CHECK(enumerate_skew_braces(*find_builtin("C8"), 8).size() >= 1);
}

TEST_CASE("dual-route oracle: lambda-map route equals direct route up to order 4") {
  for (const FiniteGroup& g : builtin_groups()) {
    if (g.n > 4) continue;
    auto via_lambda = enumerate_skew_braces(g);
    auto via_direct = enumerate_skew_braces_direct(g);
    auto key = [](const SkewBrace& s) { return s.circ.table; };
    std::set<std::vector<std::vector<int>>> a, b;
    for (const auto& s : via_lambda) a.insert(key(s));
    for (const auto& s : via_direct) b.insert(key(s));
    INFO(g.name);
    CHECK(a == b);
    CHECK(via_lambda.size() == a.size());  // no duplicates escaped
  }
}

TEST_CASE("group_algebra is flip-only") {
  CHECK_THROWS_AS(group_algebra(*find_builtin("C2"), BraidingKind::GradedFlip), InvalidInput);
}

TEST_CASE("every corpus skew brace linearizes to a valid Hopf brace") {
  const auto& c = corpus::corpus();
  REQUIRE(c.skew_braces.size() == c.braces.size());
  for (std::size_t i = 0; i < c.braces.size(); ++i) {
    const Report r = check_hopf_brace(c.braces[i]);
    INFO(c.skew_braces[i].circ.name, ": ", r.failing_keys());
    CHECK(r.all_pass());
  }
}
