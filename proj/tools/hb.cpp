// hb — exact checker, converter and evaluator for Hopf-algebraic structures.
//
// Exit codes: 0 = success / all checks pass; 1 = a well-formed structure
// fails axioms, gates or round trips; 2 = unusable input (file, parse,
// type or flag errors).

#include <cctype>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hb/bracelab.hpp"
#include "hb/checks.hpp"
#include "hb/error.hpp"
#include "hb/expr.hpp"
#include "hb/functors.hpp"
#include "hb/groups.hpp"
#include "hb/io.hpp"
#include "hb/structures.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string carrier_desc(const hb::Obj& x) {
  std::string s = "dim=" + std::to_string(x.dim);
  if (x.grading) {
    s += " grading=[";
    for (std::size_t i = 0; i < x.grading->size(); ++i) {
      if (i) s += ",";
      s += std::to_string(int((*x.grading)[i]));
    }
    s += "]";
  }
  return s;
}

ordered_json report_json(const hb::Report& r) {
  ordered_json clauses = ordered_json::array();
  for (const hb::Clause& c : r.clauses) {
    ordered_json jc;
    jc["key"] = c.key;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    clauses.push_back(std::move(jc));
  }
  ordered_json j;
  j["subject"] = r.subject;
  j["clauses"] = std::move(clauses);
  j["all_pass"] = r.all_pass();
  return j;
}

void print_report_text(const hb::Report& r) {
  int fails = 0;
  for (const hb::Clause& c : r.clauses) {
    if (c.pass) {
      std::cout << "PASS " << c.key << "\n";
    } else {
      ++fails;
      std::cout << "FAIL " << c.key;
      if (!c.note.empty()) std::cout << " (" << c.note << ")";
      std::cout << "\n";
    }
  }
  if (fails == 0)
    std::cout << "result: all " << r.clauses.size() << " clauses pass\n";
  else
    std::cout << "result: " << fails << " of " << r.clauses.size() << " clauses fail\n";
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& path, bool json) {
  const hb::StructureFile f = hb::load_structure(path);
  hb::Report r;
  switch (f.kind) {
    case hb::StructKind::Hopf: r = hb::check_hopf(hb::hopf_from_file(f)); break;
    case hb::StructKind::HopfBrace: r = hb::check_hopf_brace(hb::brace_from_file(f)); break;
    case hb::StructKind::BraceTriple: r = hb::check_brace_triple(hb::triple_from_file(f)); break;
    case hb::StructKind::PostHopf: r = hb::check_post_hopf(hb::post_from_file(f)); break;
  }
  if (json) {
    ordered_json j;
    j["command"] = "check";
    j["kind"] = hb::kind_name(f.kind);
    if (!f.name.empty()) j["name"] = f.name;
    j["carrier_dim"] = f.carrier.dim;
    j["report"] = report_json(r);
    emit_json(j);
  } else {
    std::cout << "check " << hb::kind_name(f.kind);
    if (!f.name.empty()) std::cout << " '" << f.name << "'";
    std::cout << " (carrier " << carrier_desc(f.carrier) << ")\n";
    print_report_text(r);
  }
  return r.all_pass() ? kExitPass : kExitFail;
}

// -------------------------------------------------------------- convert

hb::StructKind expected_source(const std::string& via) {
  if (via == "F" || via == "P") return hb::StructKind::BraceTriple;
  if (via == "G") return hb::StructKind::HopfBrace;
  return hb::StructKind::PostHopf;  // Q
}

int cmd_convert(const std::string& path, const std::string& via, const std::string& out,
                bool json) {
  const hb::StructureFile f = hb::load_structure(path);
  if (f.kind != expected_source(via))
    throw hb::InvalidInput("--via " + via + " expects a " +
                           hb::kind_name(expected_source(via)) + " file, got " +
                           hb::kind_name(f.kind));

  hb::StructureFile result;
  try {
    if (via == "F") {
      result = hb::to_file(hb::functor_F(hb::triple_from_file(f)).brace, f.name);
    } else if (via == "G") {
      const hb::HopfBrace b = hb::brace_from_file(f);
      hb::SHopfBraceWitness w{b, hb::antipode_inverse(b.first()),
                              hb::antipode_inverse(b.second())};
      result = hb::to_file(hb::functor_G(w), f.name);
    } else if (via == "P") {
      result = hb::to_file(hb::functor_P(hb::triple_from_file(f)), f.name);
    } else {  // Q
      result = hb::to_file(hb::functor_Q(hb::post_from_file(f)).brace, f.name);
    }
  } catch (const hb::Error& e) {
    // the structure parsed but fails the functor's hypotheses
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }

  const std::string text = hb::dump_structure(result);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw hb::IOError("cannot write '" + out + "'");
    os << text;
    if (!json)
      std::cout << "wrote " << hb::kind_name(result.kind) << " to " << out << "\n";
  }
  if (json) {
    ordered_json j;
    j["command"] = "convert";
    j["via"] = via;
    j["kind"] = hb::kind_name(result.kind);
    if (!result.name.empty()) j["name"] = result.name;
    if (!out.empty()) j["output"] = out;
    emit_json(j);
  }
  return kExitPass;
}

// ------------------------------------------------------------ roundtrip

int cmd_roundtrip(const std::string& path, const std::string& pair, bool json) {
  const hb::StructureFile f = hb::load_structure(path);

  // resolve the leg from the pair + the file's kind before touching the
  // structure, so kind mismatches surface as usage errors (exit 2)
  enum class Leg { GF, FG, QGP, PGQ } leg;
  if (pair == "FG" && f.kind == hb::StructKind::BraceTriple) leg = Leg::GF;
  else if (pair == "FG" && f.kind == hb::StructKind::HopfBrace) leg = Leg::FG;
  else if (pair == "QP" && f.kind == hb::StructKind::BraceTriple) leg = Leg::QGP;
  else if (pair == "QP" && f.kind == hb::StructKind::PostHopf) leg = Leg::PGQ;
  else
    throw hb::InvalidInput("--pair " + pair + " expects a " +
                           (pair == "FG" ? std::string("brace_triple or hopf_brace")
                                         : std::string("brace_triple or post_hopf")) +
                           " file, got " + hb::kind_name(f.kind));

  hb::RoundTripReport r;
  try {
    switch (leg) {
      case Leg::GF: r = hb::roundtrip_GF(hb::triple_from_file(f)); break;
      case Leg::FG: {
        const hb::HopfBrace b = hb::brace_from_file(f);
        hb::SHopfBraceWitness w{b, hb::antipode_inverse(b.first()),
                                hb::antipode_inverse(b.second())};
        r = hb::roundtrip_FG(w);
        break;
      }
      case Leg::QGP: r = hb::roundtrip_QGP(hb::triple_from_file(f)); break;
      case Leg::PGQ: r = hb::roundtrip_PGQ(hb::post_from_file(f)); break;
    }
  } catch (const hb::Error& e) {
    // the structure parsed but fails the functors' hypotheses
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }

  if (json) {
    ordered_json fields = ordered_json::array();
    for (const hb::FieldCmp& c : r.fields)
      fields.push_back(ordered_json{{"field", c.field}, {"equal", c.equal}});
    ordered_json j;
    j["command"] = "roundtrip";
    j["direction"] = r.direction;
    j["kind"] = hb::kind_name(f.kind);
    if (!f.name.empty()) j["name"] = f.name;
    j["fields"] = std::move(fields);
    j["identity"] = r.identity();
    emit_json(j);
  } else {
    std::cout << "roundtrip " << r.direction << " on " << hb::kind_name(f.kind);
    if (!f.name.empty()) std::cout << " '" << f.name << "'";
    std::cout << "\n";
    int diffs = 0;
    for (const hb::FieldCmp& c : r.fields) {
      std::cout << (c.equal ? "EQUAL  " : "DIFFER ") << c.field << "\n";
      if (!c.equal) ++diffs;
    }
    if (diffs == 0)
      std::cout << "result: identity\n";
    else
      std::cout << "result: " << diffs << " field(s) differ\n";
  }
  return r.identity() ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- eval

int cmd_eval(const std::string& path, const std::string& text, bool json) {
  const hb::StructureFile f = hb::load_structure(path);
  const hb::ExprPtr ast = hb::parse_expr(text);
  const hb::EvalEnv env = hb::env_for(f);
  const hb::Mor m = hb::eval_expr(*ast, env);
  const auto dense = m.dense();
  if (json) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : dense) {
      ordered_json jr = ordered_json::array();
      for (const hb::Scalar& s : row) jr.push_back(s.str());
      rows.push_back(std::move(jr));
    }
    ordered_json j;
    j["command"] = "eval";
    j["expr"] = hb::print_expr(*ast);
    j["dom"] = hb::obj_label(m.dom);
    j["cod"] = hb::obj_label(m.cod);
    j["matrix"] = std::move(rows);
    emit_json(j);
  } else {
    std::cout << "expr: " << hb::print_expr(*ast) << "\n";
    std::cout << "type: " << hb::obj_label(m.dom) << " -> " << hb::obj_label(m.cod) << "\n";
    for (const auto& row : dense) {
      std::cout << "[";
      for (const hb::Scalar& s : row) std::cout << " " << s.str();
      std::cout << " ]\n";
    }
  }
  return kExitPass;
}

// ------------------------------------------------------------ enumerate

std::string table_text(const std::vector<std::vector<int>>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(t[i][j]);
    }
  }
  return s;
}

// "C4:*1" -> "C4_1": runs of non-alphanumerics collapse to one underscore
std::string sanitize(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      s += c;
    else if (!s.empty() && s.back() != '_')
      s += '_';
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s.empty() ? "brace" : s;
}

int cmd_enumerate(int order, const std::string& family, const std::string& outdir, bool json) {
  std::vector<const hb::FiniteGroup*> groups;
  for (const hb::FiniteGroup& g : hb::builtin_groups())
    if (g.n == order) groups.push_back(&g);
  if (groups.empty())
    throw hb::InvalidInput("no built-in group of order " + std::to_string(order));

  ordered_json jgroups = ordered_json::array();
  for (const hb::FiniteGroup* g : groups) {
    std::vector<hb::SkewBrace> braces;
    if (family == "trivial") {
      braces.push_back(hb::trivial_skew_brace(*g));
    } else if (family == "opposite") {
      braces.push_back(hb::opposite_skew_brace(*g));
    } else {
      braces = hb::enumerate_skew_braces(*g);
    }

    if (json) {
      ordered_json jb = ordered_json::array();
      for (const hb::SkewBrace& s : braces)
        jb.push_back(ordered_json{{"name", s.circ.name},
                                  {"dot", s.dot.table},
                                  {"circ", s.circ.table}});
      jgroups.push_back(
          ordered_json{{"group", g->name}, {"count", braces.size()}, {"braces", std::move(jb)}});
    } else {
      std::cout << "group " << g->name << " (order " << g->n << "): " << braces.size()
                << " skew brace(s) [" << family << "]\n";
      for (const hb::SkewBrace& s : braces) {
        std::cout << "brace " << s.circ.name << "\n";
        std::cout << "  dot : " << table_text(s.dot.table) << "\n";
        std::cout << "  circ: " << table_text(s.circ.table) << "\n";
      }
    }

    if (!outdir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(outdir, ec);
      if (ec) throw hb::IOError("cannot create directory '" + outdir + "': " + ec.message());
      for (const hb::SkewBrace& s : braces) {
        const hb::HopfBrace b = hb::hopf_brace_from_skew_brace(s);
        const std::string path = outdir + "/" + sanitize(s.circ.name) + ".json";
        hb::save_structure(hb::to_file(b, s.circ.name), path);
        if (!json) std::cout << "wrote " << path << "\n";
      }
    }
  }
  if (json) {
    ordered_json j;
    j["command"] = "enumerate";
    j["order"] = order;
    j["family"] = family;
    j["groups"] = std::move(jgroups);
    emit_json(j);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for Hopf braces, brace triples and post-Hopf algebras"};
  app.require_subcommand(1);

  std::string path, out, via, pair, expr_text, family = "exhaustive";
  int order = 0;
  bool json = false;

  CLI::App* c_check = app.add_subcommand("check", "verify the axioms of a structure file");
  c_check->add_option("file", path, "structure file")->required();
  c_check->add_flag("--json", json, "structured output");

  CLI::App* c_convert = app.add_subcommand("convert", "apply a functor to a structure file");
  c_convert->add_option("file", path, "structure file")->required();
  c_convert->add_option("--via", via, "functor: F, G, P or Q")
      ->required()
      ->check(CLI::IsMember({"F", "G", "P", "Q"}));
  c_convert->add_option("-o,--output", out, "write the result here (default: stdout)");
  c_convert->add_flag("--json", json, "structured output");

  CLI::App* c_round = app.add_subcommand("roundtrip", "verify a functor round trip exactly");
  c_round->add_option("file", path, "structure file")->required();
  c_round->add_option("--pair", pair, "functor pair: FG or QP")
      ->required()
      ->check(CLI::IsMember({"FG", "QP"}));
  c_round->add_flag("--json", json, "structured output");

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a morphism expression in a file's environment");
  c_eval->add_option("file", path, "structure file")->required();
  c_eval->add_option("expr", expr_text, "morphism expression")->required();
  c_eval->add_flag("--json", json, "structured output");

  CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate skew braces on built-in groups");
  c_enum->add_option("--order", order, "group order")->required();
  c_enum->add_option("--family", family, "trivial, opposite or exhaustive")
      ->check(CLI::IsMember({"trivial", "opposite", "exhaustive"}));
  c_enum->add_option("-o,--output", out, "directory for linearized hopf_brace files");
  c_enum->add_flag("--json", json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  }

  try {
    if (c_check->parsed()) return cmd_check(path, json);
    if (c_convert->parsed()) return cmd_convert(path, via, out, json);
    if (c_round->parsed()) return cmd_roundtrip(path, pair, json);
    if (c_eval->parsed()) return cmd_eval(path, expr_text, json);
    if (c_enum->parsed()) return cmd_enumerate(order, family, out, json);
  } catch (const hb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
