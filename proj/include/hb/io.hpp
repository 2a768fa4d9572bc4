#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hb/bracelab.hpp"
#include "hb/structures.hpp"

namespace hb {

enum class StructKind { Hopf, HopfBrace, BraceTriple, PostHopf };

std::string kind_name(StructKind k);
std::optional<StructKind> kind_from_name(const std::string& s);

// In-memory image of a structure file.  `morphisms` is kept in the
// canonical key order of the kind, so serialize(parse(x)) == x holds
// byte-for-byte on canonical files:
//   hopf:        eta, mu, eps, delta, lambda
//   hopf_brace:  eta, mu1, lambda1, mu2, lambda2, eps, delta
//   brace_triple: eta, mu, eps, delta, lambda, gamma, T
//   post_hopf:   eta, mu, eps, delta, lambda, m
struct StructureFile {
  int format_version = 1;
  StructKind kind = StructKind::Hopf;
  std::string name;  // optional; empty = key absent
  Obj carrier;
  BraidingKind braid = BraidingKind::Flip;
  std::vector<std::pair<std::string, Mor>> morphisms;

  const Mor* find(const std::string& key) const;
};

// typed -> file (canonical order, carrier named "H")
StructureFile to_file(const HopfAlgebra& h, const std::string& name = "");
StructureFile to_file(const HopfBrace& b, const std::string& name = "");
StructureFile to_file(const BraceTriple& t, const std::string& name = "");
StructureFile to_file(const PostHopfAlgebra& p, const std::string& name = "");

// file -> typed (shapes are re-validated against the carrier)
HopfAlgebra hopf_from_file(const StructureFile& f);
HopfBrace brace_from_file(const StructureFile& f);
BraceTriple triple_from_file(const StructureFile& f);
PostHopfAlgebra post_from_file(const StructureFile& f);

// Canonical serialization: 2-space indented JSON, morphism entries as
// canonical rational strings, trailing newline.
std::string dump_structure(const StructureFile& f);

// Strict parse: rejects unknown keys, wrong shapes, malformed scalars and
// unsupported format versions (InvalidInput); malformed JSON raises
// IOError.  Key order in the input is irrelevant; the result is stored in
// canonical order.
StructureFile parse_structure(const std::string& text);

StructureFile load_structure(const std::string& path);   // IOError on fs problems
void save_structure(const StructureFile& f, const std::string& path);

}  // namespace hb
