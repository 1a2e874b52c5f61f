#include "gevlab/big_int.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gevlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limb_.size() != b.limb_.size()) return a.limb_.size() < b.limb_.size() ? -1 : 1;
  for (std::size_t i = a.limb_.size(); i-- > 0;) {
    if (a.limb_[i] != b.limb_[i]) return a.limb_[i] < b.limb_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (limb_.size() < o.limb_.size()) limb_.resize(o.limb_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < limb_.size(); ++i) {
    u128 s = static_cast<u128>(limb_[i]) + (i < o.limb_.size() ? o.limb_[i] : 0) + carry;
    limb_[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) limb_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(*this, o) < 0) throw std::domain_error("BigUint subtraction underflow");
  u64 borrow = 0;
  for (std::size_t i = 0; i < limb_.size(); ++i) {
    u128 need = static_cast<u128>(i < o.limb_.size() ? o.limb_[i] : 0) + borrow;
    u128 have = limb_[i];
    if (have >= need) {
      limb_[i] = static_cast<u64>(have - need);
      borrow = 0;
    } else {
      limb_[i] = static_cast<u64>((have + (static_cast<u128>(1) << 64)) - need);
      borrow = 1;
    }
  }
  trim();
  return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint();
  BigUint r;
  r.limb_.assign(limb_.size() + o.limb_.size(), 0);
  for (std::size_t i = 0; i < limb_.size(); ++i) {
    u64 carry = 0;
    u64 a = limb_[i];
    for (std::size_t j = 0; j < o.limb_.size(); ++j) {
      u128 cur = static_cast<u128>(a) * o.limb_[j] + r.limb_[i + j] + carry;
      r.limb_[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    std::size_t k = i + o.limb_.size();
    while (carry) {
      u128 cur = static_cast<u128>(r.limb_[k]) + carry;
      r.limb_[k] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
      ++k;
    }
  }
  r.trim();
  return r;
}

BigUint& BigUint::operator<<=(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  unsigned words = bits / 64, rem = bits % 64;
  std::size_t old = limb_.size();
  limb_.resize(old + words + (rem ? 1 : 0), 0);
  for (std::size_t i = old; i-- > 0;) {
    u64 v = limb_[i];
    limb_[i] = 0;
    if (rem) {
      limb_[i + words + 1] |= (v >> (64 - rem));
      limb_[i + words] |= (v << rem);
    } else {
      limb_[i + words] = v;
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::operator>>=(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  unsigned words = bits / 64, rem = bits % 64;
  if (words >= limb_.size()) {
    limb_.clear();
    return *this;
  }
  for (std::size_t i = 0; i + words < limb_.size(); ++i) {
    u64 v = limb_[i + words] >> rem;
    if (rem && i + words + 1 < limb_.size()) v |= limb_[i + words + 1] << (64 - rem);
    limb_[i] = v;
  }
  limb_.resize(limb_.size() - words);
  trim();
  return *this;
}

int BigUint::bit_length() const {
  if (is_zero()) return 0;
  return static_cast<int>((limb_.size() - 1) * 64) + (64 - std::countl_zero(limb_.back()));
}

bool BigUint::bit(int i) const {
  std::size_t w = static_cast<std::size_t>(i) / 64;
  if (w >= limb_.size()) return false;
  return (limb_[w] >> (i % 64)) & 1u;
}

void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
  if (b.is_zero()) throw std::domain_error("BigUint division by zero");
  if (b.fits_u64()) {
    u64 rem = 0;
    q = divmod_u64(a, b.as_u64(), rem);
    r = BigUint(rem);
    return;
  }
  if (compare(a, b) < 0) {
    q = BigUint();
    r = a;
    return;
  }
  q = BigUint();
  r = BigUint();
  for (int i = a.bit_length() - 1; i >= 0; --i) {
    r <<= 1;
    if (a.bit(i)) {
      if (r.limb_.empty())
        r.limb_.push_back(1);
      else
        r.limb_[0] |= 1;
    }
    if (compare(r, b) >= 0) {
      r -= b;
      std::size_t w = static_cast<std::size_t>(i) / 64;
      if (q.limb_.size() <= w) q.limb_.resize(w + 1, 0);
      q.limb_[w] |= (u64{1} << (i % 64));
    }
  }
  q.trim();
  r.trim();
}

BigUint BigUint::operator/(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return q;
}

BigUint BigUint::operator%(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return r;
}

BigUint BigUint::divmod_u64(const BigUint& a, u64 d, u64& rem) {
  if (d == 0) throw std::domain_error("BigUint division by zero");
  BigUint q;
  q.limb_.assign(a.limb_.size(), 0);
  u128 r = 0;
  for (std::size_t i = a.limb_.size(); i-- > 0;) {
    u128 cur = (r << 64) | a.limb_[i];
    q.limb_[i] = static_cast<u64>(cur / d);
    r = cur % d;
  }
  q.trim();
  rem = static_cast<u64>(r);
  return q;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto ctz = [](const BigUint& x) {
    int n = 0;
    for (std::size_t i = 0; i < x.limb_.size(); ++i) {
      if (x.limb_[i] == 0) {
        n += 64;
      } else {
        n += std::countr_zero(x.limb_[i]);
        break;
      }
    }
    return n;
  };
  int shift = std::min(ctz(a), ctz(b));
  a >>= static_cast<unsigned>(ctz(a));
  for (;;) {
    b >>= static_cast<unsigned>(ctz(b));
    if (compare(a, b) > 0) std::swap(a, b);
    b -= a;
    if (b.is_zero()) break;
  }
  a <<= static_cast<unsigned>(shift);
  return a;
}

double BigUint::to_double() const {
  if (is_zero()) return 0.0;
  double v = 0.0;
  int top = static_cast<int>(limb_.size());
  int start = top > 2 ? top - 2 : 0;
  for (int i = top - 1; i >= start; --i) v = v * 0x1.0p64 + static_cast<double>(limb_[i]);
  return std::ldexp(v, 64 * start);
}

double BigUint::log() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  int bl = bit_length();
  // take the top <=64 bits as mantissa
  BigUint t = *this;
  int shift = bl > 63 ? bl - 63 : 0;
  t >>= static_cast<unsigned>(shift);
  return std::log(static_cast<double>(t.as_u64())) + shift * 0.6931471805599453094;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint t = *this;
  std::string out;
  while (!t.is_zero()) {
    u64 rem = 0;
    t = divmod_u64(t, 10000000000000000000ULL, rem);
    char buf[24];
    if (t.is_zero())
      std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
    else
      std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(rem));
    out.insert(0, buf);
  }
  return out;
}

BigUint BigUint::factorial(unsigned n) {
  BigUint r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigUint(i);
  return r;
}

BigUint BigUint::binomial(unsigned n, unsigned k) {
  if (k > n) return BigUint();
  if (k > n - k) k = n - k;
  BigUint r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= BigUint(n - k + i);
    u64 rem = 0;
    r = divmod_u64(r, i, rem);
    if (rem != 0) throw std::logic_error("binomial: non-exact step");
  }
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (neg_ == o.neg_) return BigInt(mag_ + o.mag_, neg_);
  int c = BigUint::compare(mag_, o.mag_);
  if (c == 0) return BigInt();
  if (c > 0) return BigInt(mag_ - o.mag_, neg_);
  return BigInt(o.mag_ - mag_, o.neg_);
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
  int c = BigUint::compare(a.mag_, b.mag_);
  return a.neg_ ? -c : c;
}

BigRatio::BigRatio(BigInt num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("BigRatio: zero denominator");
  if (num_.is_zero()) {
    den_ = BigUint(1);
    return;
  }
  BigUint g = BigUint::gcd(num_.magnitude(), den_);
  if (!g.is_one()) {
    num_ = BigInt(num_.magnitude() / g, num_.negative());
    den_ = den_ / g;
  }
}

BigRatio BigRatio::operator*(const BigRatio& o) const {
  return BigRatio(num_ * o.num_, den_ * o.den_);
}

int BigRatio::compare(const BigRatio& a, const BigRatio& b) {
  BigInt lhs = a.num_ * BigInt(b.den_);
  BigInt rhs = b.num_ * BigInt(a.den_);
  return BigInt::compare(lhs, rhs);
}

double BigRatio::to_double() const {
  double n = num_.magnitude().to_double();
  double d = den_.to_double();
  double v;
  if (std::isfinite(n) && std::isfinite(d)) {
    v = n / d;
  } else {
    v = std::exp(num_.magnitude().log() - den_.log());
  }
  return num_.negative() ? -v : v;
}

std::string BigRatio::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace gevlab
