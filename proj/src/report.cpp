#include "hb/report.hpp"

#include "hb/error.hpp"

namespace hb {

bool Report::all_pass() const {
  for (const Clause& c : clauses)
    if (!c.pass) return false;
  return true;
}

const Clause* Report::find(const std::string& key) const {
  for (const Clause& c : clauses)
    if (c.key == key) return &c;
  return nullptr;
}

std::string Report::failing_keys() const {
  std::string s;
  for (const Clause& c : clauses)
    if (!c.pass) {
      if (!s.empty()) s += ", ";
      s += c.key;
    }
  return s;
}

void add_eq(Report& r, const std::string& key,
            const std::function<std::pair<Mor, Mor>()>& make) {
  Clause c;
  c.key = key;
  try {
    auto [lhs, rhs] = make();
    if (lhs.dom != rhs.dom || lhs.cod != rhs.cod) {
      c.pass = false;
      c.note = "shape mismatch: " + obj_label(lhs.dom) + "->" + obj_label(lhs.cod) + " vs " +
               obj_label(rhs.dom) + "->" + obj_label(rhs.cod);
    } else {
      Mor d = sub(lhs, rhs);
      c.pass = d.nnz() == 0;
      if (!c.pass) c.diff = std::move(d);
    }
  } catch (const Error& e) {
    c.pass = false;
    c.note = e.what();
  }
  r.clauses.push_back(std::move(c));
}

void add_flag(Report& r, const std::string& key, bool pass, const std::string& note) {
  r.clauses.push_back(Clause{key, pass, note, std::nullopt});
}

void add_sub(Report& r, const std::string& key, const Report& sub) {
  add_flag(r, key, sub.all_pass(), sub.all_pass() ? "" : "failing: " + sub.failing_keys());
}

}  // namespace hb
