#include "hb/mor.hpp"

#include <algorithm>

#include "hb/error.hpp"

namespace hb {

namespace {

const Scalar kZero{};

Mor::Row::const_iterator find_col(const Mor::Row& row, int c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Mor::Entry& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it : row.end();
}

[[noreturn]] void mismatch(const char* op, const Obj& a, const Obj& b) {
  throw DomainMismatch(std::string(op) + ": " + obj_label(a) + " vs " + obj_label(b));
}

void bounds(const char* op, const Mor& f, int r, int c) {
  if (r < 0 || r >= f.cod.dim || c < 0 || c >= f.dom.dim)
    throw InvalidInput(std::string(op) + ": index (" + std::to_string(r) + ", " +
                       std::to_string(c) + ") outside " + std::to_string(f.cod.dim) + "x" +
                       std::to_string(f.dom.dim));
}

}  // namespace

const Scalar& Mor::at(int r, int c) const {
  bounds("Mor::at", *this, r, c);
  const Row& row = rows[static_cast<std::size_t>(r)];
  auto it = find_col(row, c);
  return it == row.end() ? kZero : it->second;
}

void Mor::set(int r, int c, const Scalar& v) {
  bounds("Mor::set", *this, r, c);
  Row& row = rows[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

long Mor::nnz() const {
  long n = 0;
  for (const Row& row : rows) n += static_cast<long>(row.size());
  return n;
}

std::vector<std::vector<Scalar>> Mor::dense() const {
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(cod.dim),
                                     std::vector<Scalar>(static_cast<std::size_t>(dom.dim)));
  for (int r = 0; r < cod.dim; ++r)
    for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  return m;
}

Mor identity(const Obj& x) {
  Mor f(x, x);
  for (int i = 0; i < x.dim; ++i) f.rows[static_cast<std::size_t>(i)].push_back({i, Scalar(1)});
  return f;
}

Mor zero_mor(const Obj& dom, const Obj& cod) { return Mor(dom, cod); }

Mor from_dense(const Obj& dom, const Obj& cod, const std::vector<std::vector<Scalar>>& m) {
  if (static_cast<int>(m.size()) != cod.dim)
    throw InvalidInput("from_dense: row count " + std::to_string(m.size()) + " != cod dim " +
                       std::to_string(cod.dim));
  Mor f(dom, cod);
  for (int r = 0; r < cod.dim; ++r) {
    const auto& src = m[static_cast<std::size_t>(r)];
    if (static_cast<int>(src.size()) != dom.dim)
      throw InvalidInput("from_dense: row " + std::to_string(r) + " has " +
                         std::to_string(src.size()) + " cols, want " + std::to_string(dom.dim));
    for (int c = 0; c < dom.dim; ++c)
      if (!src[static_cast<std::size_t>(c)].is_zero())
        f.rows[static_cast<std::size_t>(r)].push_back({c, src[static_cast<std::size_t>(c)]});
  }
  return f;
}

Mor compose(const Mor& f, const Mor& g) {
  if (g.cod != f.dom) mismatch("compose", f.dom, g.cod);
  Mor r(g.dom, f.cod);
  Mor::Row acc;
  for (int i = 0; i < f.cod.dim; ++i) {
    acc.clear();
    for (const auto& [k, a] : f.rows[static_cast<std::size_t>(i)])
      for (const auto& [c, b] : g.rows[static_cast<std::size_t>(k)]) acc.push_back({c, a * b});
    if (acc.empty()) continue;
    std::sort(acc.begin(), acc.end(),
              [](const Mor::Entry& x, const Mor::Entry& y) { return x.first < y.first; });
    Mor::Row& out = r.rows[static_cast<std::size_t>(i)];
    for (auto& e : acc) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Mor::Entry& e) { return e.second.is_zero(); }),
              out.end());
  }
  return r;
}

Mor tensor(const Mor& f, const Mor& g) {
  Mor r(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod));
  const int gcod = g.cod.dim, gdom = g.dom.dim;
  for (int i = 0; i < f.cod.dim; ++i) {
    const Mor::Row& fr = f.rows[static_cast<std::size_t>(i)];
    if (fr.empty()) continue;
    for (int j = 0; j < gcod; ++j) {
      const Mor::Row& gr = g.rows[static_cast<std::size_t>(j)];
      if (gr.empty()) continue;
      Mor::Row& out = r.rows[static_cast<std::size_t>(i) * gcod + j];
      out.reserve(fr.size() * gr.size());
      for (const auto& [k, a] : fr)
        for (const auto& [l, b] : gr) out.push_back({k * gdom + l, a * b});
    }
  }
  return r;
}

bool mor_equal(const Mor& f, const Mor& g) {
  if (f.dom != g.dom || f.cod != g.cod) return false;
  return f.rows == g.rows;
}

Mor add(const Mor& f, const Mor& g) {
  if (f.dom != g.dom || f.cod != g.cod) mismatch("add", f.dom, g.dom);
  Mor r(f.dom, f.cod);
  for (int i = 0; i < f.cod.dim; ++i) {
    const Mor::Row& a = f.rows[static_cast<std::size_t>(i)];
    const Mor::Row& b = g.rows[static_cast<std::size_t>(i)];
    Mor::Row& out = r.rows[static_cast<std::size_t>(i)];
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
      if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
        out.push_back(a[p++]);
      } else if (p == a.size() || b[q].first < a[p].first) {
        out.push_back(b[q++]);
      } else {
        Scalar s = a[p].second + b[q].second;
        if (!s.is_zero()) out.push_back({a[p].first, std::move(s)});
        ++p, ++q;
      }
    }
  }
  return r;
}

Mor sub(const Mor& f, const Mor& g) { return add(f, scale(Scalar(-1), g)); }

Mor scale(const Scalar& s, const Mor& f) {
  if (s.is_zero()) return Mor(f.dom, f.cod);
  Mor r = f;
  for (auto& row : r.rows)
    for (auto& e : row) e.second *= s;
  return r;
}

Mor chain(std::initializer_list<Mor> fs) {
  if (fs.size() == 0) throw InvalidInput("chain: empty");
  auto it = fs.begin();
  Mor r = *it;
  for (++it; it != fs.end(); ++it) r = compose(r, *it);
  return r;
}

Mor tens(std::initializer_list<Mor> fs) {
  if (fs.size() == 0) throw InvalidInput("tens: empty");
  auto it = fs.begin();
  Mor r = *it;
  for (++it; it != fs.end(); ++it) r = tensor(r, *it);
  return r;
}

}  // namespace hb
