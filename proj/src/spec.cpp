#include <qbn/spec.hpp>

#include <qbn/numbers.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <vector>

namespace qbn {

const char* class_name(ClassTag t) {
  switch (t) {
    case ClassTag::B1: return "B1";
    case ClassTag::B2: return "B2";
    case ClassTag::B3: return "B3";
    case ClassTag::B4: return "B4";
  }
  return "?";
}

std::optional<ClassTag> class_from_name(std::string_view s) {
  if (s == "B1") return ClassTag::B1;
  if (s == "B2") return ClassTag::B2;
  if (s == "B3") return ClassTag::B3;
  if (s == "B4") return ClassTag::B4;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SpecError(msg); }

void require(bool ok, const char* msg) {
  if (!ok) fail(msg);
}

}  // namespace

BicirculantSpec make_spec(ClassTag tag, long m, long a, long b,
                          std::optional<long> c) {
  switch (tag) {
    case ClassTag::B1:
      require(!c.has_value(), "B1 takes parameters (m; a, b) with no c");
      require(m % 2 == 0, "B1 requires even m");
      require(m >= 4, "B1 requires m >= 4");
      require(a >= 1, "B1 requires 1 <= a");
      require(a <= b, "B1 requires a <= b");
      require(2 * b < m, "B1 requires b < m/2");
      break;
    case ClassTag::B2:
      require(c.has_value(), "B2 requires parameters (m; a, b, c)");
      require(m >= 3, "B2 requires m >= 3");
      require(a >= 1, "B2 requires 1 <= a");
      require(a <= b, "B2 requires a <= b");
      require(2 * b < m, "B2 requires b < m/2");
      require(*c >= 1, "B2 requires 1 <= c");
      require(2 * *c <= m, "B2 requires c <= m/2");
      break;
    case ClassTag::B3:
      require(!c.has_value(), "B3 takes parameters (m; a, b) with no c");
      require(m % 2 == 0, "B3 requires even m");
      require(m >= 4, "B3 requires m >= 4");
      require(a >= 1, "B3 requires 1 <= a");
      require(a < b, "B3 requires a < b");
      require(b < m, "B3 requires b < m");
      require((b - a) % 2 == 0, "B3 requires a and b of equal parity");
      break;
    case ClassTag::B4:
      require(c.has_value(), "B4 requires parameters (m; a, b, c)");
      require(m >= 4, "B4 requires m >= 4");
      require(a >= 1, "B4 requires 1 <= a");
      require(a < b, "B4 requires a < b");
      require(b < *c, "B4 requires b < c");
      require(*c < m, "B4 requires c < m");
      break;
  }
  return BicirculantSpec{tag, m, a, b, c};
}

bool is_buildable(const BicirculantSpec& s) {
  long m = s.m;
  switch (s.tag) {
    case ClassTag::B1: {
      if (m < 4 || m % 2 != 0 || s.c.has_value()) return false;
      long am = mod(s.a, m), bm = mod(s.b, m);
      return am != 0 && am != m / 2 && bm != 0 && bm != m / 2;
    }
    case ClassTag::B2: {
      if (m < 3 || !s.c.has_value()) return false;
      return mod(2 * s.a, m) != 0 && mod(2 * s.b, m) != 0 && mod(*s.c, m) != 0;
    }
    case ClassTag::B3: {
      if (m < 4 || m % 2 != 0 || s.c.has_value()) return false;
      long am = mod(s.a, m), bm = mod(s.b, m);
      return am != 0 && bm != 0 && am != bm;
    }
    case ClassTag::B4: {
      if (m < 3 || !s.c.has_value()) return false;
      long am = mod(s.a, m), bm = mod(s.b, m), cm = mod(*s.c, m);
      return am != 0 && bm != 0 && cm != 0 && am != bm && am != cm && bm != cm;
    }
  }
  return false;
}

namespace {

// Folds x to the representative of {x, -x} mod m lying in 1..m/2.
long fold(long x, long m) {
  long r = mod(x, m);
  return std::min(r, m - r);
}

}  // namespace

BicirculantSpec normalize_spec(const BicirculantSpec& s) {
  if (!is_buildable(s))
    fail("cannot normalize a degenerate spec: " + to_string(s));
  long m = s.m;
  switch (s.tag) {
    case ClassTag::B1: {
      long a = fold(s.a, m), b = fold(s.b, m);
      if (a > b) std::swap(a, b);
      return make_spec(ClassTag::B1, m, a, b);
    }
    case ClassTag::B2: {
      long a = fold(s.a, m), b = fold(s.b, m), c = fold(*s.c, m);
      if (a > b) std::swap(a, b);
      return make_spec(ClassTag::B2, m, a, b, c);
    }
    case ClassTag::B3: {
      // Minimizes over shifting the inter-orbit set {0, a, b} to place any
      // of its elements at zero, simultaneous negation, and pair order;
      // only same-parity pairs are canonical, and one always exists.
      std::array<long, 3> elems{0, mod(s.a, m), mod(s.b, m)};
      std::optional<std::pair<long, long>> best;
      for (long shift : elems) {
        std::array<long, 2> rest;
        int k = 0;
        for (long x : elems) {
          long y = mod(x - shift, m);
          if (y != 0) rest[k++] = y;
        }
        for (int sign : {1, -1}) {
          long u = mod(sign * rest[0], m), v = mod(sign * rest[1], m);
          if (u > v) std::swap(u, v);
          if ((v - u) % 2 != 0) continue;
          if (!best || std::pair(u, v) < *best) best = {u, v};
        }
      }
      return make_spec(ClassTag::B3, m, best->first, best->second);
    }
    case ClassTag::B4: {
      std::array<long, 3> r{mod(s.a, m), mod(s.b, m), mod(*s.c, m)};
      std::sort(r.begin(), r.end());
      return make_spec(ClassTag::B4, m, r[0], r[1], r[2]);
    }
  }
  fail("normalize_spec: unknown class");
}

bool is_connected_params(const BicirculantSpec& s) {
  switch (s.tag) {
    case ClassTag::B1: return gcd_all({s.m, s.a, s.b, s.m / 2}) == 1;
    case ClassTag::B2: return gcd_all({s.m, s.a, s.b, *s.c}) == 1;
    case ClassTag::B3: return gcd_all({s.m, s.m / 2, s.a, s.b}) == 1;
    case ClassTag::B4: return gcd_all({s.m, s.a, s.b, *s.c}) == 1;
  }
  return false;
}

std::string to_string(const BicirculantSpec& s) {
  std::ostringstream out;
  out << class_name(s.tag) << "(" << s.m << ";" << s.a << "," << s.b;
  if (s.c) out << "," << *s.c;
  out << ")";
  return out.str();
}

namespace {

struct Cursor {
  const std::string& text;
  size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eat(char ch) {
    skip_ws();
    if (i < text.size() && text[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  long number() {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) fail("cannot parse spec: expected a number in '" + text + "'");
    return std::stol(text.substr(start, i - start));
  }
  bool at_end() {
    skip_ws();
    return i == text.size();
  }
};

}  // namespace

BicirculantSpec parse_spec_raw(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.i + 1 >= text.size() || text[cur.i] != 'B')
    fail("cannot parse spec: expected class B1..B4 in '" + text + "'");
  char d = text[cur.i + 1];
  if (d < '1' || d > '4')
    fail("cannot parse spec: expected class B1..B4 in '" + text + "'");
  ClassTag tag = static_cast<ClassTag>(d - '1');
  cur.i += 2;
  if (!cur.eat('(')) fail("cannot parse spec: expected '(' in '" + text + "'");
  long m = cur.number();
  if (!cur.eat(';')) fail("cannot parse spec: expected ';' in '" + text + "'");
  long a = cur.number();
  if (!cur.eat(',')) fail("cannot parse spec: expected ',' in '" + text + "'");
  long b = cur.number();
  std::optional<long> c;
  if (tag == ClassTag::B2 || tag == ClassTag::B4) {
    if (!cur.eat(','))
      fail("cannot parse spec: " + std::string(class_name(tag)) +
           " needs three parameters after m in '" + text + "'");
    c = cur.number();
  }
  if (!cur.eat(')')) fail("cannot parse spec: expected ')' in '" + text + "'");
  if (!cur.at_end()) fail("cannot parse spec: trailing text in '" + text + "'");
  return BicirculantSpec{tag, m, a, b, c};
}

BicirculantSpec parse_spec(const std::string& text) {
  BicirculantSpec raw = parse_spec_raw(text);
  return make_spec(raw.tag, raw.m, raw.a, raw.b, raw.c);
}

}  // namespace qbn
