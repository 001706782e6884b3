#include "zk/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zk {
namespace {

using i128 = detail::wide;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  if (a <= kMax && b <= kMax) {
    return static_cast<i128>(std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
  }
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1
                            : static_cast<u128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz64(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  set_small(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::set_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign_mpq(std::move(q));
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz64(num_), to_mpz64(den_));
  return q;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw std::invalid_argument("malformed rational '" + part + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational '" + part + "'");
    }
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!den.empty() && den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  if (num_ != std::numeric_limits<std::int64_t>::min()) {
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  r.set_small(-static_cast<i128>(num_), den_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    // cross terms of two int64 values fit in 127 bits; the sum can overflow,
    // so route through GMP when the operands are large
    i128 a = static_cast<i128>(num_) * o.den_;
    i128 b = static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    const i128 lim = static_cast<i128>(1) << 125;
    if (a < lim && a > -lim && b < lim && b > -lim) {
      set_small(a + b, d);
      return *this;
    }
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1) {
    std::int64_t d;
    if (!__builtin_sub_overflow(num_, o.num_, &d)) {
      num_ = d;
      return *this;
    }
  }
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t p;
    if (den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &p)) {
      num_ = p;
      return *this;
    }
    set_small(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  if (!big_ && !o.big_) {
    set_small(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_mpq(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // canonical forms: a promoted value never fits in the small representation
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace zk
