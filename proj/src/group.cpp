#include "zsm/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace zsm {

namespace {

Int reduce_mod(Int x, Int d) {
  Int r = x % d;
  return r < 0 ? r + d : r;
}

void check_same_spec(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("group mismatch");
}

}  // namespace

Int GroupSpec::order_or_zero() const {
  if (free_rank > 0) return 0;
  Int n = 1;
  for (Int d : torsion) n = checked_mul(n, d, "group order");
  return n;
}

std::string GroupSpec::to_string() const {
  std::string s;
  if (free_rank > 0) {
    s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  for (Int d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(d);
  }
  if (s.empty()) s = "Z^0";
  return s;
}

bool GroupElement::is_identity() const {
  return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

GroupElement make_element(const GroupSpec& spec, std::vector<Int> coords) {
  for (Int d : spec.torsion)
    if (d < 2) throw std::invalid_argument("torsion modulus must be >= 2");
  if (spec.free_rank < 0) throw std::invalid_argument("negative free rank");
  if (static_cast<int>(coords.size()) != spec.dim())
    throw std::invalid_argument("element arity mismatch");
  for (std::size_t i = 0; i < spec.torsion.size(); ++i) {
    auto& c = coords[spec.free_rank + i];
    c = reduce_mod(c, spec.torsion[i]);
  }
  return GroupElement{spec, std::move(coords)};
}

GroupElement group_zero(const GroupSpec& spec) {
  return make_element(spec, std::vector<Int>(spec.dim(), 0));
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  check_same_spec(a, b);
  std::vector<Int> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(a.coords[i], b.coords[i], "group add");
  return make_element(a.spec, std::move(c));
}

GroupElement neg(const GroupElement& a) {
  std::vector<Int> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return make_element(a.spec, std::move(c));
}

GroupElement scalar_combination(const std::vector<GroupElement>& g,
                                const ExpVec& alpha) {
  if (g.empty()) throw std::invalid_argument("scalar_combination: empty family");
  if (g.size() != alpha.size())
    throw std::invalid_argument("scalar_combination: length mismatch");
  const GroupSpec& spec = g[0].spec;
  std::vector<Int> acc(spec.dim(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    check_same_spec(g[0], g[i]);
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] = checked_add(
          acc[j], checked_mul(alpha[i], g[i].coords[j], "scalar_combination"),
          "scalar_combination");
  }
  return make_element(spec, std::move(acc));
}

std::optional<Int> element_order(const GroupElement& a) {
  const auto& spec = a.spec;
  for (int i = 0; i < spec.free_rank; ++i)
    if (a.coords[i] != 0) return std::nullopt;
  Int ord = 1;
  for (std::size_t i = 0; i < spec.torsion.size(); ++i) {
    Int d = spec.torsion[i];
    Int c = a.coords[spec.free_rank + i];
    Int o = d / std::gcd(c, d);  // order of c in Z/d; gcd(0, d) = d
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::vector<GroupElement> all_elements(const GroupSpec& spec) {
  if (!spec.is_finite())
    throw std::invalid_argument("all_elements: infinite group");
  std::vector<GroupElement> out;
  std::vector<Int> cur(spec.torsion.size(), 0);
  while (true) {
    out.push_back(make_element(spec, std::vector<Int>(cur)));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < spec.torsion[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  Int integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      throw std::invalid_argument(std::string("expected integer in ") + what);
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

GroupSpec parse_group(const std::string& text) {
  GroupSpec spec;
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    if (!first && !(c.eat('x') || c.eat('X') || c.eat('*')))
      throw std::invalid_argument("expected 'x' between group factors");
    first = false;
    c.skip_ws();
    if (c.pos >= text.size() || (text[c.pos] != 'Z' && text[c.pos] != 'z'))
      throw std::invalid_argument("expected 'Z' in group spec");
    ++c.pos;
    if (c.eat('^')) {
      Int r = c.integer("free rank");
      if (r < 0) throw std::invalid_argument("negative free rank");
      spec.free_rank += static_cast<int>(r);
    } else if (c.eat('/')) {
      Int d = c.integer("torsion modulus");
      if (d < 2)
        throw std::invalid_argument("torsion modulus must be >= 2, got " +
                                    std::to_string(d));
      spec.torsion.push_back(d);
    } else {
      spec.free_rank += 1;
    }
  }
  if (first) throw std::invalid_argument("empty group spec");
  return spec;
}

std::vector<GroupElement> parse_elements(const GroupSpec& spec,
                                         const std::string& text) {
  std::vector<GroupElement> out;
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    if (!first && !c.eat(','))
      throw std::invalid_argument("expected ',' between elements");
    first = false;
    if (!c.eat('(')) throw std::invalid_argument("expected '(' in element");
    std::vector<Int> coords;
    if (!c.eat(')')) {
      while (true) {
        coords.push_back(c.integer("element coordinate"));
        if (c.eat(')')) break;
        if (!c.eat(',')) throw std::invalid_argument("expected ',' or ')'");
      }
    }
    if (static_cast<int>(coords.size()) != spec.dim())
      throw std::invalid_argument(
          "element arity mismatch: got " + std::to_string(coords.size()) +
          " coordinates for " + spec.to_string());
    out.push_back(make_element(spec, std::move(coords)));
  }
  if (out.empty()) throw std::invalid_argument("empty element list");
  return out;
}

}  // namespace zsm
