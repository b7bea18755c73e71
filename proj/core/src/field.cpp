#include "dias/field.hpp"

#include <cctype>
#include <ostream>

#include "dias/errors.hpp"

namespace dias {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpq_class parse_rational_literal(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ArithmeticError("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
    mpz_class n{std::string(num)};
    q = mpq_class(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ArithmeticError("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(digits), den);
  } else {
    if (!all_digits(s)) throw ArithmeticError("malformed scalar '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(s)));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U)) throw InvalidField("modulus must be below 2^32");
  if (!dias::is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.p_ = p;
  return f;
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::from_int(const FieldSpec& f, long value) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = value;
  } else {
    auto p = static_cast<long long>(f.modulus());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t p = f.modulus();
  std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw ArithmeticError("denominator vanishes in " + f.name());
  std::uint64_t num = reduce_mpz(q.get_num(), p);
  s.r_ = mul_mod(num, pow_mod(den, p - 2, p), p);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  return from_rational(f, parse_rational_literal(text));
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("scalars over " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.modulus()) r_ -= field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.modulus() - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mul_mod(r_, o.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ -= a.q_ * b.q_;
  } else {
    std::uint64_t prod = mul_mod(a.r_, b.r_, field_.modulus());
    r_ = r_ >= prod ? r_ - prod : r_ + field_.modulus() - prod;
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.name(); }

}  // namespace dias
