#pragma once

#include <vector>

#include "hb/bracelab.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"

namespace corpus {

// Everything the property and acceptance suites run over.  All entries are
// engine-generated: group algebras of the built-in groups, linearized skew
// braces (trivial + opposite families on every built-in, plus every
// exhaustively enumerated skew brace on groups of order <= 6), the graded
// super line, trivial brace triples, and the functor images of all of it.
struct Corpus {
  std::vector<hb::HopfAlgebra> hopfs;             // group algebras + super line
  std::vector<hb::SkewBrace> skew_braces;         // deduplicated by table pair
  std::vector<hb::HopfBrace> braces;              // linearizations of skew_braces
  std::vector<hb::SHopfBraceWitness> witnesses;   // braces + exact antipode inverses
  std::vector<hb::BraceTriple> triples;           // G-images + trivial triples
  std::vector<hb::PostHopfAlgebra> posts;         // P-images + trivial posts
};

const Corpus& corpus();  // built once, cached

// First corpus entry with carrier dimension >= 6 and a non-trivial action
// (gamma / m different from eps (x) id); several tests need a structure
// large enough that single-entry edits and lane comparisons are meaningful.
const hb::BraceTriple& sample_triple();
const hb::PostHopfAlgebra& sample_post();

// gamma = eps (x) id, T = lambda
hb::BraceTriple trivial_triple(const hb::HopfAlgebra& h);

// m = eps (x) id
hb::PostHopfAlgebra trivial_post(const hb::HopfAlgebra& h);

}  // namespace corpus
