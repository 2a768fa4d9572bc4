#include "hb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hb/error.hpp"

namespace hb {

namespace {

// 0 = K, 1 = H, 2 = H (x) H
struct KeySpec {
  const char* key;
  int dom;
  int cod;
};

const std::vector<KeySpec>& keys_for(StructKind k) {
  static const std::vector<KeySpec> hopf{
      {"eta", 0, 1}, {"mu", 2, 1}, {"eps", 1, 0}, {"delta", 1, 2}, {"lambda", 1, 1}};
  static const std::vector<KeySpec> brace{{"eta", 0, 1},    {"mu1", 2, 1}, {"lambda1", 1, 1},
                                          {"mu2", 2, 1},    {"lambda2", 1, 1},
                                          {"eps", 1, 0},    {"delta", 1, 2}};
  static const std::vector<KeySpec> triple{{"eta", 0, 1},   {"mu", 2, 1},  {"eps", 1, 0},
                                           {"delta", 1, 2}, {"lambda", 1, 1}, {"gamma", 2, 1},
                                           {"T", 1, 1}};
  static const std::vector<KeySpec> post{{"eta", 0, 1},   {"mu", 2, 1},     {"eps", 1, 0},
                                         {"delta", 1, 2}, {"lambda", 1, 1}, {"m", 2, 1}};
  switch (k) {
    case StructKind::Hopf: return hopf;
    case StructKind::HopfBrace: return brace;
    case StructKind::BraceTriple: return triple;
    case StructKind::PostHopf: return post;
  }
  throw InvalidInput("keys_for: bad kind");
}

Obj obj_of(int code, const Obj& carrier) {
  switch (code) {
    case 0: return unit_obj();
    case 1: return carrier;
    default: return tensor_obj(carrier, carrier);
  }
}

}  // namespace

std::string kind_name(StructKind k) {
  switch (k) {
    case StructKind::Hopf: return "hopf";
    case StructKind::HopfBrace: return "hopf_brace";
    case StructKind::BraceTriple: return "brace_triple";
    case StructKind::PostHopf: return "post_hopf";
  }
  return "?";
}

std::optional<StructKind> kind_from_name(const std::string& s) {
  if (s == "hopf") return StructKind::Hopf;
  if (s == "hopf_brace") return StructKind::HopfBrace;
  if (s == "brace_triple") return StructKind::BraceTriple;
  if (s == "post_hopf") return StructKind::PostHopf;
  return std::nullopt;
}

const Mor* StructureFile::find(const std::string& key) const {
  for (const auto& [k, m] : morphisms)
    if (k == key) return &m;
  return nullptr;
}

namespace {

StructureFile file_common(StructKind kind, const Obj& carrier, BraidingKind braid,
                          const std::string& name) {
  StructureFile f;
  f.kind = kind;
  f.name = name;
  f.carrier = carrier;
  f.carrier.name = "H";
  f.braid = braid;
  return f;
}

}  // namespace

StructureFile to_file(const HopfAlgebra& h, const std::string& name) {
  StructureFile f = file_common(StructKind::Hopf, h.carrier, h.braid, name);
  f.morphisms = {{"eta", h.unit},
                 {"mu", h.mul},
                 {"eps", h.counit},
                 {"delta", h.comul},
                 {"lambda", h.antipode}};
  return f;
}

StructureFile to_file(const HopfBrace& b, const std::string& name) {
  StructureFile f = file_common(StructKind::HopfBrace, b.carrier, b.braid, name);
  f.morphisms = {{"eta", b.unit1},      {"mu1", b.mul1}, {"lambda1", b.antipode1},
                 {"mu2", b.mul2},       {"lambda2", b.antipode2},
                 {"eps", b.counit},     {"delta", b.comul}};
  return f;
}

StructureFile to_file(const BraceTriple& t, const std::string& name) {
  StructureFile f = file_common(StructKind::BraceTriple, t.hopf.carrier, t.hopf.braid, name);
  f.morphisms = {{"eta", t.hopf.unit},     {"mu", t.hopf.mul},   {"eps", t.hopf.counit},
                 {"delta", t.hopf.comul},  {"lambda", t.hopf.antipode},
                 {"gamma", t.gamma},       {"T", t.T}};
  return f;
}

StructureFile to_file(const PostHopfAlgebra& p, const std::string& name) {
  StructureFile f = file_common(StructKind::PostHopf, p.hopf.carrier, p.hopf.braid, name);
  f.morphisms = {{"eta", p.hopf.unit},    {"mu", p.hopf.mul},          {"eps", p.hopf.counit},
                 {"delta", p.hopf.comul}, {"lambda", p.hopf.antipode}, {"m", p.m}};
  return f;
}

namespace {

const Mor& need_mor(const StructureFile& f, const char* key) {
  const Mor* m = f.find(key);
  if (!m) throw InvalidInput(std::string("structure file misses morphism '") + key + "'");
  return *m;
}

void need_kind(const StructureFile& f, StructKind k, const char* who) {
  if (f.kind != k)
    throw InvalidInput(std::string(who) + ": file has kind '" + kind_name(f.kind) + "', want '" +
                       kind_name(k) + "'");
}

}  // namespace

HopfAlgebra hopf_from_file(const StructureFile& f) {
  need_kind(f, StructKind::Hopf, "hopf_from_file");
  return {f.carrier,           f.braid,
          need_mor(f, "eta"),  need_mor(f, "mu"),
          need_mor(f, "eps"),  need_mor(f, "delta"),
          need_mor(f, "lambda"), std::nullopt};
}

HopfBrace brace_from_file(const StructureFile& f) {
  need_kind(f, StructKind::HopfBrace, "brace_from_file");
  HopfBrace b;
  b.carrier = f.carrier;
  b.braid = f.braid;
  b.counit = need_mor(f, "eps");
  b.comul = need_mor(f, "delta");
  b.unit1 = need_mor(f, "eta");
  b.mul1 = need_mor(f, "mu1");
  b.antipode1 = need_mor(f, "lambda1");
  b.unit2 = b.unit1;  // single eta in the file; coincidence stays checkable
  b.mul2 = need_mor(f, "mu2");
  b.antipode2 = need_mor(f, "lambda2");
  return b;
}

BraceTriple triple_from_file(const StructureFile& f) {
  need_kind(f, StructKind::BraceTriple, "triple_from_file");
  HopfAlgebra h{f.carrier,           f.braid,
                need_mor(f, "eta"),  need_mor(f, "mu"),
                need_mor(f, "eps"),  need_mor(f, "delta"),
                need_mor(f, "lambda"), std::nullopt};
  return {std::move(h), need_mor(f, "gamma"), need_mor(f, "T")};
}

PostHopfAlgebra post_from_file(const StructureFile& f) {
  need_kind(f, StructKind::PostHopf, "post_from_file");
  HopfAlgebra h{f.carrier,           f.braid,
                need_mor(f, "eta"),  need_mor(f, "mu"),
                need_mor(f, "eps"),  need_mor(f, "delta"),
                need_mor(f, "lambda"), std::nullopt};
  return PostHopfAlgebra(std::move(h), need_mor(f, "m"));
}

std::string dump_structure(const StructureFile& f) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": " << f.format_version << ",\n";
  out << "  \"kind\": " << nlohmann::json(kind_name(f.kind)).dump() << ",\n";
  if (!f.name.empty()) out << "  \"name\": " << nlohmann::json(f.name).dump() << ",\n";
  out << "  \"carrier\": {\"dim\": " << f.carrier.dim;
  if (f.carrier.graded()) {
    out << ", \"grading\": [";
    for (int i = 0; i < f.carrier.dim; ++i) out << (i ? ", " : "") << f.carrier.parity(i);
    out << "]";
  }
  out << "},\n";
  out << "  \"braiding\": \"" << (f.braid == BraidingKind::Flip ? "flip" : "graded_flip")
      << "\",\n";
  out << "  \"morphisms\": {\n";
  for (std::size_t k = 0; k < f.morphisms.size(); ++k) {
    const auto& [key, m] = f.morphisms[k];
    out << "    \"" << key << "\": [\n";
    for (int r = 0; r < m.cod.dim; ++r) {
      out << "      [";
      for (int c = 0; c < m.dom.dim; ++c)
        out << (c ? ", " : "") << "\"" << m.at(r, c).str() << "\"";
      out << "]" << (r + 1 < m.cod.dim ? "," : "") << "\n";
    }
    out << "    ]" << (k + 1 < f.morphisms.size() ? "," : "") << "\n";
  }
  out << "  }\n";
  out << "}\n";
  return out.str();
}

StructureFile parse_structure(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IOError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("structure file: top level must be an object");
  for (const auto& [key, val] : j.items()) {
    if (key != "format_version" && key != "kind" && key != "name" && key != "carrier" &&
        key != "braiding" && key != "morphisms")
      throw InvalidInput("structure file: unknown key '" + key + "'");
  }
  StructureFile f;
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != 1)
    throw InvalidInput("structure file: format_version must be the integer 1");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput("structure file: missing string 'kind'");
  const auto kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) throw InvalidInput("structure file: unknown kind '" + j["kind"].get<std::string>() + "'");
  f.kind = *kind;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("structure file: 'name' must be a string");
    f.name = j["name"].get<std::string>();
  }
  if (!j.contains("carrier") || !j["carrier"].is_object())
    throw InvalidInput("structure file: missing object 'carrier'");
  const nlohmann::json& car = j["carrier"];
  for (const auto& [key, val] : car.items())
    if (key != "dim" && key != "grading")
      throw InvalidInput("structure file: unknown carrier key '" + key + "'");
  if (!car.contains("dim") || !car["dim"].is_number_integer() || car["dim"].get<int>() < 1)
    throw InvalidInput("structure file: carrier.dim must be a positive integer");
  f.carrier.dim = car["dim"].get<int>();
  f.carrier.name = "H";
  if (car.contains("grading")) {
    if (!car["grading"].is_array() ||
        static_cast<int>(car["grading"].size()) != f.carrier.dim)
      throw InvalidInput("structure file: carrier.grading must be an array of length dim");
    std::vector<std::uint8_t> g;
    for (const nlohmann::json& v : car["grading"]) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw InvalidInput("structure file: grading entries must be 0 or 1");
      g.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    f.carrier.grading = std::move(g);
  }
  if (!j.contains("braiding") || !j["braiding"].is_string())
    throw InvalidInput("structure file: missing string 'braiding'");
  const std::string braid = j["braiding"].get<std::string>();
  if (braid == "flip")
    f.braid = BraidingKind::Flip;
  else if (braid == "graded_flip")
    f.braid = BraidingKind::GradedFlip;
  else
    throw InvalidInput("structure file: unknown braiding '" + braid + "'");

  if (!j.contains("morphisms") || !j["morphisms"].is_object())
    throw InvalidInput("structure file: missing object 'morphisms'");
  const nlohmann::json& ms = j["morphisms"];
  const std::vector<KeySpec>& specs = keys_for(f.kind);
  for (const auto& [key, val] : ms.items()) {
    bool known = false;
    for (const KeySpec& s : specs) known = known || key == s.key;
    if (!known)
      throw InvalidInput("structure file: morphism '" + key + "' does not belong to kind '" +
                         kind_name(f.kind) + "'");
  }
  for (const KeySpec& s : specs) {
    if (!ms.contains(s.key))
      throw InvalidInput(std::string("structure file: missing morphism '") + s.key + "'");
    const Obj dom = obj_of(s.dom, f.carrier);
    const Obj cod = obj_of(s.cod, f.carrier);
    const nlohmann::json& rows = ms[s.key];
    if (!rows.is_array() || static_cast<int>(rows.size()) != cod.dim)
      throw InvalidInput(std::string("structure file: '") + s.key + "' must have " +
                         std::to_string(cod.dim) + " rows");
    std::vector<std::vector<Scalar>> dense;
    dense.reserve(rows.size());
    for (const nlohmann::json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dom.dim)
        throw InvalidInput(std::string("structure file: '") + s.key + "' rows must have " +
                           std::to_string(dom.dim) + " entries");
      std::vector<Scalar> drow;
      drow.reserve(row.size());
      for (const nlohmann::json& v : row) {
        if (v.is_string())
          drow.push_back(Scalar::parse(v.get<std::string>()));
        else if (v.is_number_integer())
          drow.push_back(Scalar(static_cast<long>(v.get<std::int64_t>())));
        else
          throw InvalidInput(std::string("structure file: '") + s.key +
                             "' entries must be strings or integers");
      }
      dense.push_back(std::move(drow));
    }
    f.morphisms.push_back({s.key, from_dense(dom, cod, dense)});
  }
  return f;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw IOError("read error on '" + path + "'");
  return parse_structure(buf.str());
}

void save_structure(const StructureFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open '" + path + "' for writing");
  out << dump_structure(f);
  if (!out.good()) throw IOError("write error on '" + path + "'");
}

}  // namespace hb
