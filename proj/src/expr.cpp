#include "hb/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "hb/bracelab.hpp"
#include "hb/error.hpp"
#include "hb/linalg.hpp"

namespace hb {

namespace {

struct Token {
  enum class Kind { Ident, Dot, Ox, LBracket, RBracket, LParen, RParen, Comma, End };
  Kind kind = Kind::End;
  std::string text;
  SrcPos pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, SrcPos pos) {
    out.push_back({k, std::move(text), pos});
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const SrcPos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word = src.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      if (word == "ox")
        push(Token::Kind::Ox, std::move(word), pos);
      else
        push(Token::Kind::Ident, std::move(word), pos);
      continue;
    }
    ++i;
    ++col;
    switch (ch) {
      case '.': push(Token::Kind::Dot, ".", pos); break;
      case '[': push(Token::Kind::LBracket, "[", pos); break;
      case ']': push(Token::Kind::RBracket, "]", pos); break;
      case '(': push(Token::Kind::LParen, "(", pos); break;
      case ')': push(Token::Kind::RParen, ")", pos); break;
      case ',': push(Token::Kind::Comma, ",", pos); break;
      default:
        throw SyntaxError(std::string("unexpected character '") + ch + "'", pos.line, pos.col);
    }
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End)
      throw SyntaxError("unexpected '" + peek().text + "'", peek().pos.line, peek().pos.col);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  Token expect(Token::Kind k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      const std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
      throw SyntaxError(std::string("expected ") + what + ", got " + got, t.pos.line, t.pos.col);
    }
    return take();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Token::Kind::Dot) {
      const Token dot = take();
      ExprPtr r = term();
      auto node = std::make_shared<MorExpr>();
      node->kind = MorExpr::Kind::Compose;
      node->pos = dot.pos;
      node->lhs = std::move(e);
      node->rhs = std::move(r);
      e = std::move(node);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Token::Kind::Ox) {
      const Token ox = take();
      ExprPtr r = factor();
      auto node = std::make_shared<MorExpr>();
      node->kind = MorExpr::Kind::Tensor;
      node->pos = ox.pos;
      node->lhs = std::move(e);
      node->rhs = std::move(r);
      e = std::move(node);
    }
    return e;
  }

  ExprPtr factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::LParen) {
      take();
      ExprPtr e = expr();
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    if (t.kind != Token::Kind::Ident)
      throw SyntaxError("expected a morphism, got " +
                            (t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"),
                        t.pos.line, t.pos.col);
    Token name = take();
    auto node = std::make_shared<MorExpr>();
    node->pos = name.pos;
    if ((name.text == "id" || name.text == "c" || name.text == "cinv") &&
        peek().kind == Token::Kind::LBracket) {
      take();
      Token first = expect(Token::Kind::Ident, "an object name");
      if (name.text == "id") {
        node->kind = MorExpr::Kind::Id;
        node->a = first.text;
      } else {
        expect(Token::Kind::Comma, "','");
        Token second = expect(Token::Kind::Ident, "an object name");
        node->kind = name.text == "c" ? MorExpr::Kind::Braid : MorExpr::Kind::BraidInv;
        node->a = first.text;
        node->b = second.text;
      }
      expect(Token::Kind::RBracket, "']'");
      return node;
    }
    node->kind = MorExpr::Kind::Gen;
    node->a = name.text;
    return node;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// precedence: compose = 1, tensor = 2, atoms = 3
int prec(const MorExpr& e) {
  switch (e.kind) {
    case MorExpr::Kind::Compose: return 1;
    case MorExpr::Kind::Tensor: return 2;
    default: return 3;
  }
}

void print_into(const MorExpr& e, int context, std::string& out) {
  const bool parens = prec(e) < context;
  if (parens) out += "(";
  switch (e.kind) {
    case MorExpr::Kind::Gen: out += e.a; break;
    case MorExpr::Kind::Id: out += "id[" + e.a + "]"; break;
    case MorExpr::Kind::Braid: out += "c[" + e.a + "," + e.b + "]"; break;
    case MorExpr::Kind::BraidInv: out += "cinv[" + e.a + "," + e.b + "]"; break;
    case MorExpr::Kind::Compose:
      print_into(*e.lhs, 1, out);
      out += " . ";
      print_into(*e.rhs, 2, out);
      break;
    case MorExpr::Kind::Tensor:
      print_into(*e.lhs, 2, out);
      out += " ox ";
      print_into(*e.rhs, 3, out);
      break;
  }
  if (parens) out += ")";
}

std::string at_pos(const SrcPos& p) {
  return " at " + std::to_string(p.line) + ":" + std::to_string(p.col);
}

const Obj& lookup_obj(const EvalEnv& env, const std::string& name, const SrcPos& pos) {
  auto it = env.objects.find(name);
  if (it == env.objects.end())
    throw UnknownGenerator("unknown object '" + name + "'" + at_pos(pos));
  return it->second;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(lex(text)).run(); }

std::string print_expr(const MorExpr& e) {
  std::string out;
  print_into(e, 1, out);
  return out;
}

Mor eval_expr(const MorExpr& e, const EvalEnv& env) {
  switch (e.kind) {
    case MorExpr::Kind::Gen: {
      auto it = env.generators.find(e.a);
      if (it == env.generators.end())
        throw UnknownGenerator("unknown generator '" + e.a + "'" + at_pos(e.pos));
      return it->second;
    }
    case MorExpr::Kind::Id: return identity(lookup_obj(env, e.a, e.pos));
    case MorExpr::Kind::Braid:
      return braiding(env.braid, lookup_obj(env, e.a, e.pos), lookup_obj(env, e.b, e.pos));
    case MorExpr::Kind::BraidInv:
      return braiding_inverse(env.braid, lookup_obj(env, e.a, e.pos), lookup_obj(env, e.b, e.pos));
    case MorExpr::Kind::Compose: {
      Mor f = eval_expr(*e.lhs, env);
      Mor g = eval_expr(*e.rhs, env);
      if (g.cod != f.dom)
        throw TypeMismatch("cannot compose" + at_pos(e.pos) + ": left expects " +
                           obj_label(f.dom) + ", right produces " + obj_label(g.cod));
      return compose(f, g);
    }
    case MorExpr::Kind::Tensor:
      return tensor(eval_expr(*e.lhs, env), eval_expr(*e.rhs, env));
  }
  throw InvalidInput("eval_expr: corrupt node");
}

EvalEnv env_for(const StructureFile& f, Exec ex) {
  EvalEnv env;
  env.braid = f.braid;
  const Obj h = f.carrier;
  env.objects["H"] = h;
  env.objects["K"] = unit_obj();
  env.objects["Hd"] = dual_obj(h);
  env.generators["aH"] = coevaluation(h);
  env.generators["bH"] = evaluation(h);
  auto bind = [&](const char* name, const Mor& m) { env.generators[name] = m; };
  switch (f.kind) {
    case StructKind::Hopf: {
      const HopfAlgebra a = hopf_from_file(f);
      bind("eta", a.unit);
      bind("mu", a.mul);
      bind("eps", a.counit);
      bind("delta", a.comul);
      bind("lambda", a.antipode);
      break;
    }
    case StructKind::HopfBrace: {
      const HopfBrace b = brace_from_file(f);
      bind("eta", b.unit1);
      bind("mu", b.mul1);
      bind("mu1", b.mul1);
      bind("lambda", b.antipode1);
      bind("lambda1", b.antipode1);
      bind("mu2", b.mul2);
      bind("lambda2", b.antipode2);
      bind("eps", b.counit);
      bind("delta", b.comul);
      bind("gamma", gamma_of_brace(b));
      break;
    }
    case StructKind::BraceTriple: {
      const BraceTriple t = triple_from_file(f);
      bind("eta", t.hopf.unit);
      bind("mu", t.hopf.mul);
      bind("eps", t.hopf.counit);
      bind("delta", t.hopf.comul);
      bind("lambda", t.hopf.antipode);
      bind("gamma", t.gamma);
      bind("T", t.T);
      bind("alphaH", alpha_of(t.hopf, t.gamma));
      try {
        bind("betaH", beta_closed_form(t, ex));
      } catch (const Error&) {
        // T not invertible: betaH stays unbound
      }
      break;
    }
    case StructKind::PostHopf: {
      const PostHopfAlgebra p = post_from_file(f);
      bind("eta", p.hopf.unit);
      bind("mu", p.hopf.mul);
      bind("eps", p.hopf.counit);
      bind("delta", p.hopf.comul);
      bind("lambda", p.hopf.antipode);
      bind("m", p.m);
      bind("alphaH", alpha_of(p.hopf, p.m));
      try {
        bind("betaH", p.beta(ex));
      } catch (const Error&) {
        // alpha not convolution-invertible: betaH stays unbound
      }
      break;
    }
  }
  return env;
}

}  // namespace hb
