#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hb/mor.hpp"

namespace hb {

// One checked clause.  `key` is a stable identifier (definition-numbered
// where the report contract pins one, e.g. "Def2.1(vi.4)").  When a matrix
// identity fails, `diff` holds lhs - rhs so callers can locate the damage.
struct Clause {
  std::string key;
  bool pass = false;
  std::string note;          // context: failing sub-key, error text, ...
  std::optional<Mor> diff;
};

struct Report {
  std::string subject;  // "hopf", "hopf_brace", "brace_triple", ...
  std::vector<Clause> clauses;

  bool all_pass() const;
  const Clause* find(const std::string& key) const;
  std::string failing_keys() const;  // comma-joined, for notes/messages
};

// Evaluates `make` to an (lhs, rhs) pair and records lhs == rhs; a thrown
// engine error marks the clause failed with the error text as the note,
// so checkers never raise.  Clauses are appended in definition order and
// every clause is always evaluated (no short-circuiting).
void add_eq(Report& r, const std::string& key,
            const std::function<std::pair<Mor, Mor>()>& make);

// Records an externally computed verdict.
void add_flag(Report& r, const std::string& key, bool pass, const std::string& note = "");

// Summarizes a sub-report into a single clause of `r` (pass iff all pass;
// note lists the failing keys).
void add_sub(Report& r, const std::string& key, const Report& sub);

}  // namespace hb
