#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "qsh/cartan.hpp"

using namespace qsh;

TEST_CASE("Cartan matrix, symmetrizer, parity") {
  RootDatum d(3);
  CHECK(d.cartan(1, 1) == 2);
  CHECK(d.cartan(1, 2) == -1);
  CHECK(d.cartan(2, 1) == -1);
  CHECK(d.cartan(2, 3) == -1);
  CHECK(d.cartan(3, 2) == -2);
  CHECK(d.cartan(1, 3) == 0);
  CHECK(d.symmetrizer(1) == 2);
  CHECK(d.symmetrizer(2) == 2);
  CHECK(d.symmetrizer(3) == 1);
  CHECK(d.parity(1) == 0);
  CHECK(d.parity(2) == 0);
  CHECK(d.parity(3) == 1);
  for (int i = 1; i <= 3; ++i) {
    CHECK(d.bilinear(d.simple(i), d.simple(i)) == 2 * d.symmetrizer(i));
    for (int j = 1; j <= 3; ++j) CHECK(d.b(i, j) == d.b(j, i));
  }
}

TEST_CASE("bilinear form values at n=2") {
  RootDatum d(2);
  const Weight a1 = d.simple(1), a2 = d.simple(2);
  CHECK(d.bilinear(a1, a2) == -2);
  CHECK(d.bilinear(a1, Weight::zero(2)) == 0);
  const Weight nu = a1 + a2 + a2;
  CHECK(d.bilinear(nu, nu) == 4);
}

TEST_CASE("N and P") {
  RootDatum d(2);
  for (int i = 1; i <= 2; ++i) {
    CHECK(d.bigN(d.simple(i)) == 0);
    CHECK(d.bigP(d.simple(i)) == 0);
  }
  const Weight a1 = d.simple(1), a2 = d.simple(2);
  CHECK(d.bigN(a1 + a2 + a2) == -2);
  CHECK(d.bigP(a1 + a2) == 0);
}

TEST_CASE("N is even and N, P are quasi-additive") {
  for (int n = 1; n <= 4; ++n) {
    RootDatum d(n);
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(0, 5);
    for (int t = 0; t < 200; ++t) {
      Weight mu = Weight::zero(n), nu = Weight::zero(n);
      for (int i = 0; i < n; ++i) {
        mu.c[i] = c(rng);
        nu.c[i] = c(rng);
      }
      CHECK(d.bigN(mu) % 2 == 0);
      CHECK(d.bigN(mu + nu) == d.bigN(mu) + d.bigN(nu) + d.bilinear(mu, nu));
      // p in the P identity is the integer c_n, not its mod-2 reduction
      CHECK(d.bigP(mu + nu) ==
            d.bigP(mu) + d.bigP(nu) + mu.c[n - 1] * nu.c[n - 1]);
    }
  }
}

TEST_CASE("reduced positive roots at n=2 match the rank-2 system") {
  RootDatum d(2);
  const auto roots = reduced_positive_roots(d);
  REQUIRE(roots.size() == 4);
  const Weight a1 = d.simple(1), a2 = d.simple(2);
  std::multiset<std::vector<long>> got, want;
  for (auto& r : roots) got.insert(r.weight.c);
  for (auto& w : {a1, a2, a1 + a2, a1 + a2 + a2}) want.insert(w.c);
  CHECK(got == want);
}

TEST_CASE("reduced root count and distinctness") {
  for (int n = 1; n <= 5; ++n) {
    RootDatum d(n);
    const auto roots = reduced_positive_roots(d);
    CHECK(roots.size() == static_cast<size_t>(n) * n);
    std::set<std::vector<long>> weights;
    for (auto& r : roots) weights.insert(r.weight.c);
    CHECK(weights.size() == roots.size());
  }
}

TEST_CASE("full positive system at n=2 and n=1") {
  {
    RootDatum d(2);
    const auto full = full_positive_roots(d);
    CHECK(full.full.size() == 6);
    const Weight a1 = d.simple(1), a2 = d.simple(2);
    std::multiset<std::vector<long>> f;
    for (auto& w : full.full) f.insert(w.c);
    CHECK(f.count((a2 + a2).c) == 1);
    CHECK(f.count((a1 + a1 + a2 + a2).c) == 1);
    std::multiset<std::vector<long>> odd, want_odd;
    for (auto& w : full.full_odd) odd.insert(w.c);
    want_odd.insert(a2.c);
    want_odd.insert((a1 + a2).c);
    CHECK(odd == want_odd);
    CHECK(full.full_even.size() == 4);
  }
  {
    RootDatum d(1);
    const auto full = full_positive_roots(d);
    REQUIRE(full.full.size() == 2);
    CHECK(full.full[0].c == std::vector<long>{1});
    CHECK(std::count(full.full.begin(), full.full.end(),
                     Weight({2})) == 1);
  }
}

TEST_CASE("root weights follow the alpha/beta defining sums") {
  RootDatum d(3);
  const Root a = make_alpha(d, 1, 2);
  CHECK(a.weight.c == std::vector<long>{1, 1, 0});
  const Root b = make_beta(d, 1, 3);
  CHECK(b.weight.c == std::vector<long>{1, 1, 2});
  const Root b2 = make_beta(d, 1, 2);
  CHECK(b2.weight.c == std::vector<long>{1, 2, 2});
}
