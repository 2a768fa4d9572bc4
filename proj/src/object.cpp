#include "hb/object.hpp"

namespace hb {

bool operator==(const Obj& a, const Obj& b) {
  if (a.dim != b.dim) return false;
  if (!a.grading && !b.grading) return true;
  for (int i = 0; i < a.dim; ++i)
    if (a.parity(i) != b.parity(i)) return false;
  return true;
}

Obj unit_obj() {
  return Obj{1, std::vector<std::uint8_t>{0}, "K"};
}

Obj tensor_obj(const Obj& x, const Obj& y) {
  Obj r;
  r.dim = x.dim * y.dim;
  if (x.graded() || y.graded()) {
    std::vector<std::uint8_t> g(static_cast<std::size_t>(r.dim));
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < y.dim; ++j)
        g[static_cast<std::size_t>(i) * y.dim + j] =
            static_cast<std::uint8_t>((x.parity(i) + y.parity(j)) & 1);
    r.grading = std::move(g);
  }
  r.name = "(" + (x.name.empty() ? "?" : x.name) + "x" + (y.name.empty() ? "?" : y.name) + ")";
  return r;
}

Obj dual_obj(const Obj& x) {
  Obj r = x;
  r.name = (x.name.empty() ? "?" : x.name) + "*";
  return r;
}

std::string obj_label(const Obj& x) {
  return (x.name.empty() ? "?" : x.name) + "[dim " + std::to_string(x.dim) + "]";
}

}  // namespace hb
