#include "hb/scalar.hpp"

#include <cctype>

#include "hb/error.hpp"

namespace hb {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InvalidInput("scalar with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidInput("scalar division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::parse(const std::string& text) {
  // Strict shape: "-"?digits("/"digits)? with no spaces; exactly the
  // canonical form str() emits.
  auto bad = [&] { throw InvalidInput("malformed rational literal: '" + text + "'"); };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) bad();
  if (i < text.size()) {
    if (text[i] != '/') bad();
    std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) bad();
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) bad();
  if (v.get_den() == 0) throw InvalidInput("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return Scalar(std::move(v));
}

std::string Scalar::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace hb
