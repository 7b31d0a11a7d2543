#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sb {

enum class ErrorKind {
  invalid,      // malformed input or violated precondition
  unsupported,  // solver/rule combination not available
  capacity,     // size limits, enumeration limits, overflow
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Checked int64 arithmetic; throws a capacity error on overflow.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::capacity, "integer overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::capacity, "integer overflow");
  return r;
}

// Exact fraction with int64 parts, always normalized (den > 0, gcd 1).
// Arithmetic goes through 128-bit intermediates and throws capacity when the
// normalized result no longer fits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static Rational make(__int128 n, __int128 d);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// "p/q" or "p"; throws invalid on anything else.
Rational parse_rational(std::string_view text);
// Always "p/q", e.g. "4/1".
std::string format_rational(const Rational& r);

// Smallest integer >= r.
std::int64_t ceil_rational(const Rational& r);

}  // namespace sb
