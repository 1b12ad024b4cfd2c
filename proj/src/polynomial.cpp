#include "ballpoly/polynomial.hpp"

#include <charconv>
#include <cctype>
#include <ostream>
#include <sstream>

#include "ballpoly/multi_index.hpp"
#include "ballpoly/polynomial_io.hpp"

namespace ballpoly {

// ---------------------------------------------------------------- Rational

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw std::invalid_argument("malformed rational: " + s);
  }
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  if (slash == 0 || slash == s.size() - 1 || (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos))
    throw std::invalid_argument("malformed rational: " + s);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// -------------------------------------------------------------- MultiIndex

int MultiIndex::check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("multi-index dimension out of range");
  return dim;
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::span<const int>(exponents.begin(), exponents.size())) {}

MultiIndex::MultiIndex(std::span<const int> exponents) : dim_(static_cast<std::uint8_t>(check_dim(static_cast<int>(exponents.size())))) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

MultiIndex MultiIndex::unit(int dim, int axis) {
  MultiIndex m(dim);
  m.set(axis, 1);
  return m;
}

void MultiIndex::set(int axis, int exponent) {
  if (axis < 0 || axis >= dim_) throw std::out_of_range("multi-index axis out of range");
  if (exponent < 0 || exponent > kMaxExponent) throw std::out_of_range("exponent out of range");
  total_ = static_cast<std::uint16_t>(total_ - exp_[axis] + exponent);
  exp_[axis] = static_cast<std::uint8_t>(exponent);
}

std::uint32_t MultiIndex::odd_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < dim_; ++i) mask |= static_cast<std::uint32_t>(exp_[i] & 1u) << i;
  return mask;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("multi-index dimensions differ");
  for (int i = 0; i < dim_; ++i) {
    const int e = exp_[i] + other.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    exp_[i] = static_cast<std::uint8_t>(e);
  }
  total_ = static_cast<std::uint16_t>(total_ + other.total_);
  return *this;
}

MultiIndex MultiIndex::incremented(int axis) const {
  MultiIndex m(*this);
  m.set(axis, exp_[static_cast<std::size_t>(axis)] + 1);
  return m;
}

MultiIndex MultiIndex::decremented(int axis) const {
  MultiIndex m(*this);
  m.set(axis, exp_[static_cast<std::size_t>(axis)] - 1);
  return m;
}

std::size_t MultiIndex::hash() const {
  std::size_t h = dim_;
  for (int i = 0; i < dim_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

namespace {

void compositions(int dim, int axis, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (axis == dim - 1) {
    cur.set(axis, remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(axis, e);
    compositions(dim, axis + 1, remaining - e, cur, out);
  }
  cur.set(axis, 0);
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int dim, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0) return out;
  MultiIndex cur(dim);
  compositions(dim, 0, degree, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(int dim, int degree) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= degree; ++k) {
    auto block = monomials_of_degree(dim, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

// -------------------------------------------------------------- Polynomial

Rational make_primitive(MPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer lcm_den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer num = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(lcm_den, content);
  scale.canonicalize();
  if (sgn(leading_term(p).second) < 0) scale = -scale;
  p *= scale;
  return scale;
}

MPoly one_minus_norm_sq(int dim) {
  MPoly p = MPoly::constant(dim, Rational(1));
  for (int i = 0; i < dim; ++i) {
    MultiIndex m(dim);
    m.set(i, 2);
    p.add_term(m, Rational(-1));
  }
  return p;
}

// ---------------------------------------------------------------- Text I/O

namespace {

template <class Scalar>
void append_monomial(std::ostringstream& os, const MultiIndex& m) {
  bool first = true;
  for (int i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
}

std::string magnitude_string(const Rational& c) { return to_string(abs(c)); }

std::string magnitude_string(double c) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::abs(c));
  return std::string(buf, res.ptr);
}

template <class Scalar>
std::string format_impl(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mag = magnitude_string(c);
    if (m.total() == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag << '*';
      append_monomial<Scalar>(os, m);
    }
  }
  return os.str();
}

class PolyParser {
 public:
  PolyParser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  MPoly parse() {
    MPoly result(dim_);
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();
      auto [m, c] = parse_term();
      result.add_term(m, sign > 0 ? c : Rational(-c));
    }
    return result;
  }

 private:
  std::pair<MultiIndex, Rational> parse_term() {
    Rational coef(1);
    MultiIndex m(dim_);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= parse_number();
        any = true;
      } else if (c == 'x') {
        ++pos_;
        const int axis = static_cast<int>(parse_uint()) - 1;
        if (axis < 0 || axis >= dim_) fail("variable index out of range");
        long e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_uint();
        }
        m.set(axis, m[axis] + static_cast<int>(e));
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    return {m, coef};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  long parse_uint() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const MPoly& p) { return format_impl(p); }
std::string format(const MPolyD& p) { return format_impl(p); }

MPoly parse_polynomial(std::string_view text, int dim) { return PolyParser(text, dim).parse(); }

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << format(p); }

}  // namespace ballpoly
