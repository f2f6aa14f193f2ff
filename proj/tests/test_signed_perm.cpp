#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "alcove/signed_perm.hpp"

using namespace alcove;

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SignedPerm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({3, 1}), std::invalid_argument);
  CHECK_NOTHROW(SignedPerm({2, -1, 3}));
}

TEST_CASE("compose") {
  SignedPerm id = SignedPerm::identity(2);
  SignedPerm swap({2, 1});
  SignedPerm flip({-1, 2});
  CHECK(compose(id, swap) == swap);
  CHECK(compose(swap, swap) == id);
  CHECK(compose(flip, flip) == id);
}

TEST_CASE("action on vectors") {
  SignedPerm id = SignedPerm::identity(2);
  IntVec v{5, 7};
  CHECK(act(id, v) == v);
  CHECK(act(SignedPerm({2, 1}), v) == IntVec{7, 5});
  CHECK(act(SignedPerm({-1, 2}), v) == IntVec{-5, 7});
}

TEST_CASE("parity in the doubled symmetric group") {
  CHECK(SignedPerm::identity(2).is_even_in_s2n());
  CHECK_FALSE(SignedPerm({-1, 2}).is_even_in_s2n());
  CHECK(SignedPerm({-1, -2}).is_even_in_s2n());
}

TEST_CASE("star symmetry of the induced 2n-letter form") {
  SignedPerm s({2, -1, 3});
  auto p = s.two_n_letters();
  int two_n = 6;
  for (int i = 1; i <= two_n; ++i)
    CHECK(s.image2n(star_index(i, two_n)) == star_index(s.image2n(i), two_n));
  CHECK(p == std::vector<int>{2, 6, 3, 4, 1, 5});
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_signed(2, false).size() == 8);
  CHECK(enumerate_signed(2, true).size() == 4);
  CHECK(enumerate_signed(3, false).size() == 48);
  CHECK_THROWS_AS(enumerate_signed(9, false), guard_error);
}

TEST_CASE("group laws on random triples") {
  std::mt19937 rng(7);
  auto random_window = [&](int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    for (auto& x : w)
      if (rng() & 1u) x = -x;
    return SignedPerm(std::move(w));
  };
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    SignedPerm a = random_window(n), b = random_window(n), c = random_window(n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a.inverse(), a) == SignedPerm::identity(n));
    CHECK(compose(a, b).is_even_in_s2n() == (a.is_even_in_s2n() == b.is_even_in_s2n()));
    IntVec v(static_cast<size_t>(n));
    for (auto& x : v) x = coord(rng);
    CHECK(act(compose(a, b), v) == act(a, act(b, v)));
  }
}
