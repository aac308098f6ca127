#pragma once

// Exact field scalars: arbitrary-precision rationals and prime fields F_p.
// Both types plug into Eigen dense matrices through NumTraits below.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace moritakit {

using BigInt = boost::multiprecision::cpp_int;

class FieldError : public std::runtime_error {
public:
  explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rational number in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw FieldError("rational with zero denominator");
    v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
  }

  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return from_rat(BigRat(BigInt(text)));
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw FieldError("rational with zero denominator: " + text);
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw FieldError("cannot parse rational: " + text);
    }
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }

  std::string str() const {
    if (den() == 1) return num().str();
    return num().str() + "/" + den().str();
  }

  Rational operator+(const Rational& o) const { return from_rat(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return from_rat(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return from_rat(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.v_.is_zero()) throw FieldError("division by zero");
    return from_rat(v_ / o.v_);
  }
  Rational operator-() const { return from_rat(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  using BigRat = boost::multiprecision::cpp_rational;
  static Rational from_rat(BigRat v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }
  BigRat v_;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residue modulo a prime. Every attached value carries its modulus so that
/// mixing residues from different fields is caught at the arithmetic level.
/// Values built from bare integer literals (as Eigen does for 0 and 1) stay
/// unattached until combined with an attached value.
class Fp {
public:
  Fp() : v_(0), p_(0) {}
  Fp(long long n) : v_(n), p_(0) {}
  Fp(long long n, std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    v_ = reduce(n, p);
  }

  std::uint32_t modulus() const { return p_; }
  bool attached() const { return p_ != 0; }
  long long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  static Fp parse(const std::string& text, std::uint32_t p) {
    try {
      return Fp(std::stoll(text), p);
    } catch (const std::logic_error&) {
      throw FieldError("cannot parse prime-field element: " + text);
    }
  }

  std::string str() const { return std::to_string(v_); }

  Fp operator+(const Fp& o) const {
    auto [a, b, p] = unify(*this, o);
    return make(p == 0 ? a + b : (a + b) % p, p);
  }
  Fp operator-(const Fp& o) const {
    auto [a, b, p] = unify(*this, o);
    return make(p == 0 ? a - b : reduce(a - b, p), p);
  }
  Fp operator*(const Fp& o) const {
    auto [a, b, p] = unify(*this, o);
    return make(p == 0 ? a * b : (a * b) % p, p);
  }
  Fp operator/(const Fp& o) const {
    auto [a, b, p] = unify(*this, o);
    if (b == 0) throw FieldError("division by zero");
    if (p == 0) {
      if (b != 1 && b != -1) throw FieldError("division of unattached integers");
      return make(a * b, 0);
    }
    return make(a * inverse(b, p) % p, p);
  }
  Fp operator-() const { return make(p_ == 0 ? -v_ : reduce(-v_, p_), p_); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

  bool operator==(const Fp& o) const {
    auto [a, b, p] = unify(*this, o);
    return a == b;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.v_;
  }

private:
  static long long reduce(long long n, std::uint32_t p) {
    long long r = n % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  static Fp make(long long v, std::uint32_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  static long long inverse(long long a, std::uint32_t p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
  }
  // Returns both values reduced to a common modulus (0 when both unattached).
  static std::tuple<long long, long long, std::uint32_t> unify(const Fp& x, const Fp& y) {
    if (x.p_ != 0 && y.p_ != 0 && x.p_ != y.p_)
      throw FieldError("field mismatch: F_" + std::to_string(x.p_) + " vs F_" + std::to_string(y.p_));
    std::uint32_t p = x.p_ != 0 ? x.p_ : y.p_;
    if (p == 0) return {x.v_, y.v_, 0};
    return {reduce(x.v_, p), reduce(y.v_, p), p};
  }

  long long v_;
  std::uint32_t p_;
};

template <typename K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name() { return "rational"; }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct FieldTraits<Fp> {
  static std::string name() { return "prime"; }
  static std::string str(const Fp& x) { return x.str(); }
};

}  // namespace moritakit

namespace Eigen {

template <>
struct NumTraits<moritakit::Rational> {
  using Real = moritakit::Rational;
  using NonInteger = moritakit::Rational;
  using Nested = moritakit::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<moritakit::Fp> {
  using Real = moritakit::Fp;
  using NonInteger = moritakit::Fp;
  using Nested = moritakit::Fp;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 6,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
