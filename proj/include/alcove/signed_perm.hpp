#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "alcove/base.hpp"

namespace alcove {

// Signed permutation in window notation: window[i-1] is the signed image of
// the letter i, so {2,-1,3} maps 1 -> 2, 2 -> -1, 3 -> 3.  Windows with all
// entries positive are plain permutations.
//
// A window of size n also encodes the element of S*_{2n} subset S_{2n} fixed
// by sigma(i*) = sigma(i)*, where i* = 2n+1-i: a negative entry -j at
// position i means the 2n-letter image of i is j* = 2n+1-j.
struct SignedPerm {
  std::vector<int> window;

  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> w) : window(std::move(w)) { validate(); }

  static SignedPerm identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
    return SignedPerm(std::move(w));
  }

  int rank() const { return static_cast<int>(window.size()); }

  void validate() const {
    int n = rank();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : window) {
      int a = std::abs(x);
      if (a < 1 || a > n || seen[static_cast<size_t>(a)])
        throw std::invalid_argument("SignedPerm: window is not a signed permutation");
      seen[static_cast<size_t>(a)] = true;
    }
  }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i)
      if (window[static_cast<size_t>(i - 1)] != i) return false;
    return true;
  }

  bool all_positive() const {
    return std::all_of(window.begin(), window.end(), [](int x) { return x > 0; });
  }

  int flip_count() const {
    return static_cast<int>(std::count_if(window.begin(), window.end(),
                                          [](int x) { return x < 0; }));
  }

  // parity inside S_{2n}: the doubled permutation contributes evenly and each
  // sign flip is the transposition (i i*), so this is the flip-count parity
  bool is_even_in_s2n() const { return flip_count() % 2 == 0; }

  // image of a 1-based letter in {1,...,2n} under the induced element of S*_{2n}
  int image2n(int i) const {
    int n = rank();
    bool starred = i > n;
    if (starred) i = star_index(i, 2 * n);
    int w = window[static_cast<size_t>(i - 1)];
    int img = w > 0 ? w : star_index(-w, 2 * n);
    return starred ? star_index(img, 2 * n) : img;
  }

  std::vector<int> two_n_letters() const {
    int n = rank();
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int i = 1; i <= 2 * n; ++i) p[static_cast<size_t>(i - 1)] = image2n(i);
    return p;
  }

  // inverse window: if i -> eps*j then j -> eps*i
  SignedPerm inverse() const {
    int n = rank();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
      int x = window[static_cast<size_t>(i - 1)];
      w[static_cast<size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
    }
    return SignedPerm(std::move(w));
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

// (a o b)(i) = a(b(i))
inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> w(b.window.size());
  for (size_t k = 0; k < w.size(); ++k) {
    int x = b.window[k];
    int y = a.window[static_cast<size_t>(std::abs(x) - 1)];
    w[k] = x > 0 ? y : -y;
  }
  return SignedPerm(std::move(w));
}

// Left action on vectors: if a maps slot i to slot j with sign eps, then
// (a.v)(j) = eps*v(i).  Plain permutations permute entries; sign flips
// multiply entries by -1.
template <class V>
V act(const SignedPerm& a, const V& v) {
  if (static_cast<size_t>(a.rank()) != v.size())
    throw std::invalid_argument("act: length mismatch");
  V r = v;
  for (size_t k = 0; k < v.size(); ++k) {
    int x = a.window[k];
    size_t j = static_cast<size_t>(std::abs(x) - 1);
    r[j] = x > 0 ? v[k] : -v[k];
  }
  return r;
}

enum class WindowKind {
  Plain,       // S_n: all entries positive
  AllSigned,   // S*_{2n}: any signs
  EvenSigned,  // S°_{2n}: an even number of negative entries
};

// Enumerate windows of the given kind, smallest rank first in lexicographic
// window order.  Guarded: the full signed group has 2^n n! elements.
inline void enumerate_windows(int n, WindowKind kind,
                              const std::function<void(const SignedPerm&)>& visit,
                              Int guard = 8) {
  if (n > guard_limit(guard))
    throw guard_error("enumerate_windows: rank " + std::to_string(n) + " exceeds guard");
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
  std::sort(perm.begin(), perm.end());
  do {
    if (kind == WindowKind::Plain) {
      visit(SignedPerm(perm));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (kind == WindowKind::EvenSigned && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> w = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
      visit(SignedPerm(std::move(w)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// all 2^n n! signed windows, or the index-2 even-signed subgroup
inline std::vector<SignedPerm> enumerate_signed(int n, bool even_only, Int guard = 8) {
  std::vector<SignedPerm> out;
  enumerate_windows(n, even_only ? WindowKind::EvenSigned : WindowKind::AllSigned,
                    [&](const SignedPerm& s) { out.push_back(s); }, guard);
  return out;
}

}  // namespace alcove
