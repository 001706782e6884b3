#include "zk/surface.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "zk/errors.hpp"

namespace zk {

SurfaceConfig SurfaceConfig::make(int k) {
  if (k < 1) throw ValidationError("k must be >= 1, got " + std::to_string(k));
  return SurfaceConfig{k};
}

LaurentPoly2 LaurentPoly2::monomial(int s, int r, const Rational& c) {
  LaurentPoly2 p;
  p.add_term({s, r}, c);
  return p;
}

Rational LaurentPoly2::coefficient(Monomial2 m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly2::add_term(Monomial2 m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LaurentPoly2::min_r() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.r;
}

std::optional<int> LaurentPoly2::max_r() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.r;
}

std::optional<int> LaurentPoly2::min_s() const {
  if (terms_.empty()) return std::nullopt;
  int best = terms_.begin()->first.s;
  for (const auto& [m, c] : terms_) best = std::min(best, m.s);
  return best;
}

std::optional<int> LaurentPoly2::max_s() const {
  if (terms_.empty()) return std::nullopt;
  int best = terms_.begin()->first.s;
  for (const auto& [m, c] : terms_) best = std::max(best, m.s);
  return best;
}

LaurentPoly2 LaurentPoly2::shifted(int ds, int dr) const {
  LaurentPoly2 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial2{m.s + ds, m.r + dr}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly2 out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
  return out;
}

LaurentPoly2 LaurentPoly2::truncated(int max_r) const {
  LaurentPoly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.r > max_r) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::u_slice(int r) const {
  LaurentPoly2 out;
  for (auto it = terms_.lower_bound({std::numeric_limits<int>::min(), r});
       it != terms_.end() && it->first.r == r; ++it) {
    out.terms_.emplace_hint(out.terms_.end(), Monomial2{it->first.s, 0}, it->second);
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly2 multiply(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term({ma.s + mb.s, ma.r + mb.r}, ca * cb);
  }
  return out;
}

bool is_holomorphic_U(Monomial2 m) { return m.s >= 0 && m.r >= 0; }

bool is_holomorphic_V(int k, Monomial2 m) { return m.r >= 0 && m.s <= k * m.r; }

bool is_cone_monomial(int k, Monomial2 m) { return is_holomorphic_U(m) && is_holomorphic_V(k, m); }

std::vector<Monomial2> cone_ring_basis(int k, int d) {
  std::vector<Monomial2> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(k * d + 1));
  for (int a = 0; a <= k * d; ++a) out.push_back({a, d});
  return out;
}

ConeRingElement::ConeRingElement(int k, LaurentPoly2 poly) : k_(k), poly_(std::move(poly)) {
  for (const auto& [m, c] : poly_.terms()) {
    if (!is_cone_monomial(k_, m)) {
      throw ValidationError("z^" + std::to_string(m.s) + "*u^" + std::to_string(m.r) +
                            " is not in the cone ring for k=" + std::to_string(k_));
    }
  }
}

std::vector<Rational> ConeRingElement::graded_piece(int d) const {
  std::vector<Rational> out(d < 0 ? 0 : static_cast<std::size_t>(k_ * d + 1));
  for (const auto& [m, c] : poly_.terms()) {
    if (m.r == d) out[static_cast<std::size_t>(m.s)] = c;
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string text) : text_(std::move(text)) {}

  LaurentPoly2 parse() {
    if (text_.empty()) fail("empty polynomial");
    LaurentPoly2 out;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  int parse_int(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    try {
      return std::stoi(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  int parse_exponent(bool allow_negative) {
    if (peek() != '^') return 1;
    ++pos_;
    bool neg = peek() == '-';
    if (neg && !allow_negative) fail("negative u exponent");
    return parse_int(true);
  }

  void parse_term(LaurentPoly2& out, int sign) {
    Rational coeff(sign);
    int s = 0, r = 0;
    bool any = false;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
          coeff *= Rational::parse(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else if (c == 'z') {
        ++pos_;
        s += parse_exponent(true);
      } else if (c == 'u') {
        ++pos_;
        r += parse_exponent(false);
      } else {
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    out.add_term({s, r}, coeff);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_laurent(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return TermParser(std::move(compact)).parse();
}

std::string format_laurent(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (!mag.is_one() || (m.s == 0 && m.r == 0)) factors.push_back(mag.str());
    if (m.s != 0) factors.push_back(m.s == 1 ? "z" : "z^" + std::to_string(m.s));
    if (m.r != 0) factors.push_back(m.r == 1 ? "u" : "u^" + std::to_string(m.r));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace zk
