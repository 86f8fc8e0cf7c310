#include "lattisym/field.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lattisym/errors.hpp"

namespace lattisym {

namespace {

// a + b*sqrt2, the intermediate field of the tower Q < Q(sqrt2) < Q(sqrt2)(sqrt3).
struct QSqrt2 {
  Rational a, b;

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrt2 operator*(const Rational& k, const QSqrt2& y) { return {k * y.a, k * y.b}; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }

  QSqrt2 inverse() const {
    Rational norm = a * a - 2 * b * b;
    if (sgn(norm) == 0) throw DivisionByZero();
    return {a / norm, -b / norm};
  }

  int sign() const {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    const int sd = sgn(Rational(a * a - 2 * b * b));
    return sa > 0 ? sd : -sd;
  }

  std::optional<QSqrt2> sqrt() const {
    if (sign() < 0) return std::nullopt;
    std::optional<QSqrt2> root;
    if (sgn(b) == 0) {
      if (auto r = rational_sqrt(a)) {
        root = QSqrt2{*r, 0};
      } else if (auto h = rational_sqrt(Rational(a / 2))) {
        root = QSqrt2{0, *h};
      }
    } else if (auto n = rational_sqrt(Rational(a * a - 2 * b * b))) {
      for (const Rational& t : {Rational((a + *n) / 2), Rational((a - *n) / 2)}) {
        auto alpha = rational_sqrt(t);
        if (!alpha || sgn(*alpha) == 0) continue;
        QSqrt2 cand{*alpha, b / (2 * *alpha)};
        if (cand * cand == *this) {
          root = cand;
          break;
        }
      }
    }
    if (root && root->sign() < 0) root = QSqrt2{-root->a, -root->b};
    return root;
  }
};

// x = u + v*sqrt3 with u, v in Q(sqrt2).
std::pair<QSqrt2, QSqrt2> split(const FieldElement& x) {
  return {QSqrt2{x.p(), x.q()}, QSqrt2{x.r(), x.s()}};
}

FieldElement join(const QSqrt2& u, const QSqrt2& v) { return {u.a, u.b, v.a, v.b}; }

// Coefficients of x * basis_k for k in {1, sqrt2, sqrt3, sqrt6}.
std::array<Rational, 4> times_basis(const FieldElement& x, int k) {
  const Rational &p = x.p(), &q = x.q(), &r = x.r(), &s = x.s();
  switch (k) {
    case 0: return {p, q, r, s};
    case 1: return {2 * q, p, 2 * s, r};
    case 2: return {3 * r, 3 * s, p, q};
    default: return {6 * s, 3 * r, 2 * q, p};
  }
}

void append_term(std::string& out, const Rational& c, const char* radical) {
  if (sgn(c) == 0) return;
  const bool negative = sgn(c) < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (radical == nullptr) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += radical;
  } else {
    out += to_string(mag);
    out += '*';
    out += radical;
  }
}

FieldElement parse_factor(std::string_view f, std::string_view whole) {
  if (f == "sqrt2" || f == "sqrt(2)") return FieldElement::sqrt2();
  if (f == "sqrt3" || f == "sqrt(3)") return FieldElement::sqrt3();
  if (f == "sqrt6" || f == "sqrt(6)") return FieldElement::sqrt6();
  if (f.empty()) throw ParseError("empty factor in '" + std::string(whole) + "'");
  if (f.starts_with("sqrt")) {
    // sqrtN/d
    const auto slash = f.find('/');
    if (slash != std::string_view::npos) {
      const std::string reciprocal = "1/" + std::string(f.substr(slash + 1));
      return parse_factor(f.substr(0, slash), whole) * parse_factor(reciprocal, whole);
    }
    throw ParseError("unsupported radical in '" + std::string(whole) + "'");
  }
  try {
    return FieldElement(parse_rational(f));
  } catch (const ParseError&) {
    throw ParseError("malformed field element '" + std::string(whole) + "'");
  }
}

}  // namespace

int FieldElement::term_count() const {
  int n = 0;
  for (const auto& c : c_) n += sgn(c) != 0 ? 1 : 0;
  return n;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  if (x.is_rational()) {
    const Rational& k = x.p();
    return {k * y.p(), k * y.q(), k * y.r(), k * y.s()};
  }
  if (y.is_rational()) {
    const Rational& k = y.p();
    return {k * x.p(), k * x.q(), k * x.r(), k * x.s()};
  }
  const Rational &p1 = x.p(), &q1 = x.q(), &r1 = x.r(), &s1 = x.s();
  const Rational &p2 = y.p(), &q2 = y.q(), &r2 = y.r(), &s2 = y.s();
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
  return {p1 * p2 + 2 * q1 * q2 + 3 * r1 * r2 + 6 * s1 * s2,
          p1 * q2 + q1 * p2 + 3 * (r1 * s2 + s1 * r2),
          p1 * r2 + r1 * p2 + 2 * (q1 * s2 + s1 * q2),
          p1 * s2 + s1 * p2 + q1 * r2 + r1 * q2};
}

int FieldElement::sign() const {
  const auto [u, v] = split(*this);
  const int su = u.sign();
  const int sv = v.sign();
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  const QSqrt2 d = u * u - Rational(3) * (v * v);
  const int sd = d.sign();
  return su > 0 ? sd : -sd;
}

double FieldElement::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(3.0) +
         c_[3].get_d() * std::sqrt(6.0);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(Rational(1 / c_[0]));

  // Augmented system [M | e1], column k of M = coefficients of (*this * basis_k).
  std::array<std::array<Rational, 5>, 4> m;
  for (int k = 0; k < 4; ++k) {
    const auto col = times_basis(*this, k);
    for (std::size_t i = 0; i < 4; ++i) m[i][static_cast<std::size_t>(k)] = col[i];
  }
  for (std::size_t i = 0; i < 4; ++i) m[i][4] = i == 0 ? 1 : 0;

  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == 4) throw DivisionByZero();
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < 5; ++j) m[col][j] *= inv;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < 5; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::optional<FieldElement> FieldElement::sqrt() const {
  const int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return FieldElement(0);

  const auto [u, v] = split(*this);
  std::optional<FieldElement> root;
  if (v.is_zero()) {
    if (auto a = u.sqrt()) {
      root = join(*a, QSqrt2{0, 0});
    } else if (auto b = (Rational(1, 3) * u).sqrt()) {
      root = join(QSqrt2{0, 0}, *b);
    }
  } else if (auto n = (u * u - Rational(3) * (v * v)).sqrt()) {
    for (const QSqrt2& t : {Rational(1, 2) * (u + *n), Rational(1, 2) * (u - *n)}) {
      auto alpha = t.sqrt();
      if (!alpha || alpha->is_zero()) continue;
      const QSqrt2 beta = Rational(1, 2) * (v * alpha->inverse());
      FieldElement cand = join(*alpha, beta);
      if (cand * cand == *this) {
        root = std::move(cand);
        break;
      }
    }
  }
  if (root && root->sign() < 0) root = -*root;
  return root;
}

std::string FieldElement::to_string() const {
  std::string out;
  append_term(out, c_[0], nullptr);
  append_term(out, c_[1], "sqrt2");
  append_term(out, c_[2], "sqrt3");
  append_term(out, c_[3], "sqrt6");
  return out.empty() ? "0" : out;
}

FieldElement FieldElement::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty field element");

  // Split into signed terms at top-level '+'/'-' that do not follow an operator.
  std::vector<std::pair<int, std::string>> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    bool saw_sign = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      saw_sign = true;
      ++i;
    }
    if (!terms.empty() && !saw_sign) throw ParseError("malformed field element '" + s + "'");
    std::size_t j = i;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '*' && s[j - 1] != '/')) {
      ++j;
    }
    if (j == i) throw ParseError("malformed field element '" + s + "'");
    terms.emplace_back(sign, s.substr(i, j - i));
    i = j;
  }

  FieldElement total;
  for (const auto& [sign, body] : terms) {
    FieldElement term(1);
    std::size_t start = 0;
    while (true) {
      const auto star = body.find('*', start);
      const auto factor = std::string_view(body).substr(start, star == std::string::npos ? std::string::npos : star - start);
      term = term * parse_factor(factor, s);
      if (star == std::string::npos) break;
      start = star + 1;
    }
    total += sign < 0 ? -term : term;
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace lattisym
