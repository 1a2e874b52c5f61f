#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gevlab {

/// Arbitrary-precision unsigned integer over little-endian 64-bit limbs.
/// Supports exactly the operations the lemma verifiers need; all of them
/// are exact (division asserts or returns quotient+remainder).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    if (v) limb_.push_back(v);
  }

  bool is_zero() const { return limb_.empty(); }
  bool is_one() const { return limb_.size() == 1 && limb_[0] == 1; }
  bool fits_u64() const { return limb_.size() <= 1; }
  std::uint64_t as_u64() const { return limb_.empty() ? 0 : limb_[0]; }

  static int compare(const BigUint& a, const BigUint& b);
  bool operator==(const BigUint& o) const { return limb_ == o.limb_; }
  bool operator!=(const BigUint& o) const { return !(*this == o); }
  bool operator<(const BigUint& o) const { return compare(*this, o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(*this, o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(*this, o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(*this, o) >= 0; }

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint operator+(const BigUint& o) const {
    BigUint r = *this;
    r += o;
    return r;
  }
  BigUint operator-(const BigUint& o) const {
    BigUint r = *this;
    r -= o;
    return r;
  }
  BigUint operator*(const BigUint& o) const;
  BigUint& operator*=(const BigUint& o) {
    *this = *this * o;
    return *this;
  }

  BigUint& operator<<=(unsigned bits);
  BigUint& operator>>=(unsigned bits);

  /// Quotient and remainder; shift-subtract long division (exactness over
  /// speed: division sits off the hot paths).
  static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
  BigUint operator/(const BigUint& o) const;
  BigUint operator%(const BigUint& o) const;

  /// Division by a single limb, used by decimal printing and binomials.
  static BigUint divmod_u64(const BigUint& a, std::uint64_t d, std::uint64_t& rem);

  static BigUint gcd(BigUint a, BigUint b);  // binary gcd

  int bit_length() const;
  bool bit(int i) const;

  double to_double() const;  // +inf on overflow
  double log() const;        // natural log, -inf for zero
  std::string to_string() const;

  static BigUint factorial(unsigned n);
  static BigUint binomial(unsigned n, unsigned k);

 private:
  void trim() {
    while (!limb_.empty() && limb_.back() == 0) limb_.pop_back();
  }
  std::vector<std::uint64_t> limb_;
};

/// Signed arbitrary-precision integer.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v)  // NOLINT: implicit by design
      : neg_(v < 0), mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)) {}
  BigInt(BigUint mag, bool neg = false) : neg_(neg && !mag.is_zero()), mag_(std::move(mag)) {}

  bool is_zero() const { return mag_.is_zero(); }
  bool negative() const { return neg_; }
  const BigUint& magnitude() const { return mag_; }

  BigInt operator-() const { return BigInt(mag_, !neg_); }
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const { return *this + (-o); }
  BigInt operator*(const BigInt& o) const { return BigInt(mag_ * o.mag_, neg_ != o.neg_); }
  BigInt& operator+=(const BigInt& o) {
    *this = *this + o;
    return *this;
  }

  static int compare(const BigInt& a, const BigInt& b);
  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }

  double to_double() const { return neg_ ? -mag_.to_double() : mag_.to_double(); }
  std::string to_string() const { return (neg_ ? "-" : "") + mag_.to_string(); }

 private:
  bool neg_ = false;
  BigUint mag_;
};

/// Exact rational; stored in lowest terms with positive denominator.
class BigRatio {
 public:
  BigRatio() : num_(0), den_(1) {}
  BigRatio(BigInt num, BigUint den);
  BigRatio(std::int64_t num, std::uint64_t den = 1) : BigRatio(BigInt(num), BigUint(den)) {}

  const BigInt& num() const { return num_; }
  const BigUint& den() const { return den_; }

  BigRatio operator*(const BigRatio& o) const;
  static int compare(const BigRatio& a, const BigRatio& b);
  bool operator==(const BigRatio& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const BigRatio& o) const { return !(*this == o); }
  bool operator<(const BigRatio& o) const { return compare(*this, o) < 0; }
  bool operator<=(const BigRatio& o) const { return compare(*this, o) <= 0; }
  bool operator>(const BigRatio& o) const { return compare(*this, o) > 0; }

  double to_double() const;
  std::string to_string() const;  // "p/q", or "p" when q == 1

 private:
  BigInt num_;
  BigUint den_;
};

}  // namespace gevlab
