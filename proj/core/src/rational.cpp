#include "topo/rational.hpp"

#include <ostream>
#include <utility>

#include "topo/error.hpp"

namespace topo {

namespace {

// GMP's C++ constructors take long; this build targets LP64 platforms.
static_assert(sizeof(long) == sizeof(long long));

BigInt big(long long x) { return BigInt(static_cast<long>(x)); }

}  // namespace

Rational::Rational(long long value) : value_(big(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorKind::SpecViolation, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long long numerator, long long denominator)
    : Rational(big(numerator), big(denominator)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    BigInt out;
    if (s.empty() || out.set_str(std::string(s), 10) != 0) {
      throw Error(ErrorKind::SpecViolation, "not an integer: '" + std::string(s) + "'");
    }
    return out;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw Error(ErrorKind::SpecViolation, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational harmonic_number(int j) {
  Rational sum;
  for (int i = 1; i <= j; ++i) sum += Rational(1, i);
  return sum;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace topo
