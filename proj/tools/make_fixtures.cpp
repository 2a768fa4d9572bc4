// Writes the golden-test fixture files.  Every fixture is produced by the
// engine itself (no hand-typed matrices), so regenerating after an engine
// change shows exactly which bytes moved.

#include <cstdio>
#include <filesystem>
#include <string>

#include "hb/bracelab.hpp"
#include "hb/error.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"
#include "hb/io.hpp"
#include "hb/structures.hpp"

using namespace hb;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "tests/golden/fixtures";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::fprintf(stderr, "cannot create %s: %s\n", dir.c_str(), ec.message().c_str());
    return 1;
  }
  auto put = [&](const StructureFile& f, const std::string& file) {
    save_structure(f, dir + "/" + file);
    std::printf("wrote %s/%s\n", dir.c_str(), file.c_str());
  };

  // plain Hopf algebras
  put(to_file(group_algebra(*find_builtin("C2")), "k-c2"), "c2_hopf.json");
  put(to_file(super_line(), "super-line"), "super_hopf.json");

  // the S3 chain: brace -> triple -> post, all sharing one name so that
  // functor images propagate it and byte-level round trips line up
  const HopfBrace brace = hopf_brace_from_skew_brace(opposite_skew_brace(*find_builtin("S3")));
  const SHopfBraceWitness w{brace, antipode_inverse(brace.first()),
                            antipode_inverse(brace.second())};
  const BraceTriple triple = functor_G(w);
  const PostHopfAlgebra post = functor_P(triple);
  put(to_file(brace, "s3-opp"), "s3_brace.json");
  put(to_file(triple, "s3-opp"), "s3_triple.json");
  put(to_file(post, "s3-opp"), "s3_post.json");

  // a deliberately broken triple: one rational entry of gamma nudged
  BraceTriple bad = triple;
  bad.gamma.set(1, 2, bad.gamma.at(1, 2) + Scalar(1, 7));
  put(to_file(bad, "s3-perturbed"), "perturbed.json");
  return 0;
}
