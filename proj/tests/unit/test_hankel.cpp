#include <doctest.h>

#include "support/oracles.hpp"

using namespace diagschur;
using oracle::seq;

TEST_CASE("hankel_det examples") {
  CHECK(hankel_det(seq({1, 1, 1}), 2) == 0);
  CHECK(hankel_det(seq({2, 3, 5, 9}), 2) == 1);
  CHECK(hankel_det(seq({7}), 0) == 1);
  CHECK(hankel_det({}, 0) == 1);
  try {
    hankel_det(seq({1, 2}), 2);
    FAIL("expected InsufficientData");
  } catch (const InsufficientData& e) {
    CHECK(e.required == 3);
  }
}

TEST_CASE("shifted_hankel_det examples") {
  CHECK(shifted_hankel_det(seq({2, 3, 5, 9}), 1) == 3);
  CHECK(shifted_hankel_det(seq({2, 3, 5, 9}), 2) == 2);
  CHECK(shifted_hankel_det(seq({2}), 0) == 1);
  CHECK_THROWS_AS(shifted_hankel_det(seq({2, 3, 5}), 2), InsufficientData);
}

TEST_CASE("determinant matches Laplace expansion on random 5x5 matrices") {
  oracle::Gen g(21);
  for (int t = 0; t < 100; ++t) {
    int n = g.uniform(1, 5);
    RationalMatrix m(n, std::vector<Rational>(n));
    oracle::Mat qm(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        // Sparse entries so that singular and pivot-swapping cases occur.
        m[i][k] = g.uniform(0, 2) == 0 ? Rational() : g.small(9, 7);
        qm[i][k] = m[i][k].value();
      }
    CHECK(determinant(m).value() == oracle::laplace_det(qm));
  }
}

TEST_CASE("hankel_det matches Laplace expansion on random sequences") {
  oracle::Gen g(22);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> s;
    for (int i = 0; i < 10; ++i) s.push_back(g.small(4, 3));
    for (int n = 0; n <= 5; ++n) {
      CHECK(hankel_det(s, n).value() == oracle::laplace_det(oracle::hankel(s, n, 0)));
      if (n <= 4) CHECK(shifted_hankel_det(s, n).value() == oracle::laplace_det(oracle::hankel(s, n, 1)));
    }
  }
}

TEST_CASE("normal index examples") {
  auto a = normal_indices(seq({1, 1, 1, 1}));
  CHECK(a.indices == std::vector<int>{1});
  CHECK(a.nu == std::vector<int>{1});
  CHECK(a.mu == std::vector<int>{1});

  auto b = normal_indices(seq({2, 3, 5, 9, 17, 33}));
  CHECK(b.indices == std::vector<int>{1, 2});
  CHECK(b.nu == std::vector<int>{1, 2});
  CHECK(b.mu == std::vector<int>{1, 2});

  auto c = normal_indices(seq({0, 1, 0, 0}));
  CHECK(c.indices == std::vector<int>{2});
  CHECK(hankel_det(seq({0, 1, 0}), 2) == -1);

  // D_2^+ would need s_4, so index 2 stays undecided.
  auto d = normal_indices(seq({2, 3, 5}));
  CHECK(d.indices == std::vector<int>{1, 2});
  CHECK(d.undecidable == std::vector<int>{2});
  CHECK(d.mu == std::vector<int>{1});
}

TEST_CASE("regularity examples") {
  CHECK(is_regular(seq({1, 1, 1, 1})).regular);
  CHECK(is_regular(seq({2, 3, 5, 9, 17, 33})).regular);
  auto r = is_regular(seq({1, 0, 1, 0}));
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness);
  CHECK(*r.witness == 1);
}

TEST_CASE("normal indices agree with a Hankel-rank oracle") {
  oracle::Gen g(23);
  for (int t = 0; t < 300; ++t) {
    int len = g.uniform(1, 10);
    std::vector<Rational> s;
    for (int i = 0; i < len; ++i) s.push_back(g.uniform(0, 2) == 0 ? Rational() : g.small(2, 2));
    auto got = normal_indices(s);
    auto want = oracle::brute_indices(s);
    CHECK(got.indices == want.indices);
    CHECK(got.nu == want.nu);
    CHECK(got.mu == want.mu);
    CHECK(got.undecidable == want.undecidable);
    CHECK(interlaced(got));
    // Both readings of regularity coincide.
    CHECK(is_regular(s).regular == regular_by_classification(got));
  }
}

TEST_CASE("measure moments have Hankel rank equal to the atom count") {
  oracle::Gen g(24);
  for (int t = 0; t < 40; ++t) {
    int k = g.uniform(1, 4);
    auto mu = g.measure(1, k);
    int len = g.uniform(1, 10);
    auto s = moments(mu, len - 1);
    auto set = normal_indices(s);
    std::vector<int> expect;
    for (int n = 1; n <= k && 2 * n - 1 <= len; ++n) expect.push_back(n);
    CHECK(set.indices == expect);
    CHECK(set.nu == expect);
    CHECK(is_regular(s).regular);
  }
}
