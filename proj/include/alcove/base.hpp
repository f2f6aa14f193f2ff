#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using Int = long long;
using IntVec = std::vector<Int>;

// Thrown when a brute-force guard would be exceeded.  The CLI maps this to
// exit code 3.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a self-verifying algorithm contradicts its own postconditions.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Guards are fixed defaults, raisable (never lowerable) through the
// ALCOVE_LAB_GUARD environment variable or an explicit argument.
inline Int guard_limit(Int default_limit) {
  if (const char* env = std::getenv("ALCOVE_LAB_GUARD")) {
    Int v = std::atoll(env);
    if (v > default_limit) return v;
  }
  return default_limit;
}

// Exact rational arithmetic.  All alcove-point computations go through this
// type; there is no floating point anywhere in the library.  Values are kept
// normalized with den > 0.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n) {}
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat rat_abs(const Rat& a) { return a.num < 0 ? -a : a; }

using RatVec = std::vector<Rat>;

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

template <class V>
V add(const V& a, const V& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  V r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] + b[k];
  return r;
}

template <class V>
V sub(const V& a, const V& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  V r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] - b[k];
  return r;
}

template <class V>
V neg(const V& a) {
  V r = a;
  for (auto& x : r) x = -x;
  return r;
}

template <class V>
auto vec_sum(const V& a) {
  typename V::value_type s{};
  for (const auto& x : a) s = s + x;
  return s;
}

// <alpha, v> for an integer linear functional alpha
inline Int dot(const IntVec& alpha, const IntVec& v) {
  if (alpha.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (size_t k = 0; k < alpha.size(); ++k) s += alpha[k] * v[k];
  return s;
}

inline Rat dot(const IntVec& alpha, const RatVec& v) {
  if (alpha.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t k = 0; k < alpha.size(); ++k) s = s + Rat(alpha[k]) * v[k];
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x.num != 0) return false;
  return true;
}

// the vector (d, d, ..., d)
template <class T>
std::vector<T> constant_vec(int n, T d) {
  return std::vector<T>(static_cast<size_t>(n), d);
}

// standard basis vector e_i, 1-based index
inline IntVec basis(int n, int i) {
  IntVec e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(i - 1)] = 1;
  return e;
}

// v* with v*(i) = v(i*), i* = (size+1) - i: plain entry reversal
template <class V>
V reversed(const V& v) {
  return V(v.rbegin(), v.rend());
}

// the star involution on letters 1..2n
inline int star_index(int i, int two_n) { return two_n + 1 - i; }

// (x_1,...,x_n) -> (x_1,...,x_n,-x_n,...,-x_1)
template <class V>
V embed_sym(const V& x) {
  V r = x;
  for (auto it = x.rbegin(); it != x.rend(); ++it) r.push_back(-*it);
  return r;
}

// first-half readout of a symmetric 2n-vector, checking y* = -y
template <class V>
V restrict_sym(const V& y) {
  if (y.size() % 2 != 0) throw std::invalid_argument("restrict_sym: odd length");
  size_t n = y.size() / 2;
  for (size_t k = 0; k < y.size(); ++k)
    if (!(y[k] == -y[y.size() - 1 - k]))
      throw std::invalid_argument("restrict_sym: vector is not antisymmetric");
  return V(y.begin(), y.begin() + static_cast<long>(n));
}

inline std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

inline std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += v[k].str();
  }
  return s + ")";
}

}  // namespace alcove
