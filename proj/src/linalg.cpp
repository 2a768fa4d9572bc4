#include "hb/linalg.hpp"

#include <algorithm>
#include <utility>

#include "hb/error.hpp"

namespace hb {

namespace {

// Integer row spanning columns 0..n+m-1 (solution columns first, then the
// right-hand-side columns); entries sorted by column, never zero.
using ZRow = std::vector<std::pair<int, mpz_class>>;

void content_reduce(ZRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ZRow integerize(const Mor::Row& arow, const std::vector<Scalar>& brow, int n) {
  mpz_class lcm = 1;
  for (const auto& [c, v] : arow)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den().get_mpz_t());
  for (const Scalar& v : brow)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den().get_mpz_t());
  ZRow row;
  row.reserve(arow.size() + brow.size());
  for (const auto& [c, v] : arow)
    row.push_back({c, mpz_class(v.raw().get_num() * (lcm / v.raw().get_den()))});
  for (int j = 0; j < static_cast<int>(brow.size()); ++j) {
    const Scalar& v = brow[static_cast<std::size_t>(j)];
    if (!v.is_zero())
      row.push_back({n + j, mpz_class(v.raw().get_num() * (lcm / v.raw().get_den()))});
  }
  content_reduce(row);
  return row;
}

// row <- (pv * row - rv * pivot) / content, merged by column.
ZRow eliminate(const ZRow& row, const ZRow& pivot, const mpz_class& pv, const mpz_class& rv) {
  ZRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t p = 0, q = 0;
  while (p < row.size() || q < pivot.size()) {
    if (q == pivot.size() || (p < row.size() && row[p].first < pivot[q].first)) {
      out.push_back({row[p].first, mpz_class(pv * row[p].second)});
      ++p;
    } else if (p == row.size() || pivot[q].first < row[p].first) {
      out.push_back({pivot[q].first, mpz_class(-rv * pivot[q].second)});
      ++q;
    } else {
      mpz_class v = pv * row[p].second - rv * pivot[q].second;
      if (v != 0) out.push_back({row[p].first, std::move(v)});
      ++p, ++q;
    }
  }
  content_reduce(out);
  return out;
}

const mpz_class* value_at(const ZRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const std::pair<int, mpz_class>& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SolveOutcome solve_exact(int n, const std::vector<Mor::Row>& a,
                         const std::vector<std::vector<Scalar>>& b, Exec ex) {
  const int m = n > 0 && !b.empty() ? static_cast<int>(b.front().size()) : 0;
  const std::vector<Scalar> no_rhs;
  std::vector<ZRow> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = integerize(
        a[static_cast<std::size_t>(i)], b.empty() ? no_rhs : b[static_cast<std::size_t>(i)], n);

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> pivot_of(static_cast<std::size_t>(n), -1);
  int rank = 0;
  std::vector<long> victims;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    victims.clear();
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)] || rows[static_cast<std::size_t>(i)].empty()) continue;
      if (rows[static_cast<std::size_t>(i)].front().first != col) continue;
      if (piv < 0)
        piv = i;  // first nonzero in this column becomes the pivot
      else
        victims.push_back(i);
    }
    if (piv < 0) continue;
    used[static_cast<std::size_t>(piv)] = 1;
    pivot_of[static_cast<std::size_t>(col)] = piv;
    ++rank;
    const ZRow& prow = rows[static_cast<std::size_t>(piv)];
    const mpz_class& pv = prow.front().second;
    parallel_for(ex, static_cast<long>(victims.size()), [&](long vi) {
      ZRow& r = rows[static_cast<std::size_t>(victims[static_cast<std::size_t>(vi)])];
      r = eliminate(r, prow, pv, r.front().second);
    });
  }

  SolveOutcome out;
  out.rank = rank;
  if (rank < n) return out;

  out.ok = true;
  out.x.assign(static_cast<std::size_t>(n),
               std::vector<Scalar>(static_cast<std::size_t>(m), Scalar(0)));
  for (int col = n - 1; col >= 0; --col) {
    const ZRow& row = rows[static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(col)])];
    const mpq_class lead(row.front().second);
    parallel_for(ex, m, [&](long j) {
      mpq_class acc = 0;
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto& [c, v] = row[k];
        if (c >= n) break;  // remaining entries are right-hand-side columns
        acc += mpq_class(v) * out.x[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)].raw();
      }
      mpq_class rhs = 0;
      if (const mpz_class* bv = value_at(row, n + static_cast<int>(j))) rhs = *bv;
      mpq_class xv((rhs - acc) / lead);
      xv.canonicalize();
      out.x[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] = Scalar(std::move(xv));
    });
  }
  return out;
}

std::optional<Mor> try_invert(const Mor& f, Exec ex) {
  if (f.dom.dim != f.cod.dim) return std::nullopt;
  const int n = f.dom.dim;
  std::vector<std::vector<Scalar>> id(static_cast<std::size_t>(n),
                                      std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(0)));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);
  SolveOutcome s = solve_exact(n, f.rows, id, ex);
  if (!s.ok) return std::nullopt;
  Mor g(f.cod, f.dom);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!s.x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero())
        g.rows[static_cast<std::size_t>(r)].push_back(
            {c, s.x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]});
  return g;
}

Mor invert(const Mor& f, Exec ex) {
  if (f.dom.dim != f.cod.dim)
    throw NotInvertible("invert: non-square morphism " + obj_label(f.dom) + " -> " +
                        obj_label(f.cod), -1, f.cod.dim);
  if (auto g = try_invert(f, ex)) return *g;
  SolveOutcome s = solve_exact(f.dom.dim, f.rows, {}, ex);
  throw NotInvertible("invert: rank " + std::to_string(s.rank) + " of " +
                      std::to_string(f.dom.dim), s.rank, f.dom.dim);
}

}  // namespace hb
