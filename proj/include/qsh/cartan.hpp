#ifndef QSH_CARTAN_HPP
#define QSH_CARTAN_HPP

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsh/scalar.hpp"

// Root datum of osp(1|2n): Cartan matrix, symmetrizer, parity, the bilinear
// form on the root lattice, the reduced and full positive root systems, and
// the combinatorial functions N and P.

namespace qsh {

// Element of Q^+, stored as the coefficient vector on the simple roots.
struct Weight {
  std::vector<long> c;

  Weight() = default;
  explicit Weight(std::vector<long> coeffs) : c(std::move(coeffs)) {}
  static Weight zero(int n) { return Weight(std::vector<long>(n, 0)); }

  long height() const { return std::accumulate(c.begin(), c.end(), 0L); }
  bool is_zero() const { return height() == 0; }

  Weight& operator+=(const Weight& o) {
    if (c.size() != o.c.size()) throw std::domain_error("weight rank mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(long m, const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x *= m;
    return r;
  }

  auto operator<=>(const Weight&) const = default;
};

class RootDatum {
public:
  explicit RootDatum(int n) : n_(n) {
    if (n < 1) throw std::domain_error("rank must be positive");
    a_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a_[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) {
      a_[i][i + 1] = -1;
      a_[i + 1][i] = (i + 1 == n - 1) ? -2 : -1;
    }
    s_.assign(n, 2);
    s_[n - 1] = 1;
    b_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b_[i][j] = s_[i] * a_[i][j];
  }

  int rank() const { return n_; }
  // Letters are 1-based throughout, matching the alphabet I = {1,...,n}.
  int cartan(int i, int j) const { return a_[i - 1][j - 1]; }
  int symmetrizer(int i) const { return s_[i - 1]; }
  int b(int i, int j) const { return b_[i - 1][j - 1]; }
  int parity(int i) const { return i == n_ ? 1 : 0; }

  Weight simple(int i) const {
    Weight w = Weight::zero(n_);
    w.c[i - 1] = 1;
    return w;
  }

  long bilinear(const Weight& mu, const Weight& nu) const {
    check(mu);
    check(nu);
    long r = 0;
    for (int i = 0; i < n_; ++i) {
      if (mu.c[i] == 0) continue;
      for (int j = 0; j < n_; ++j) r += mu.c[i] * nu.c[j] * b_[i][j];
    }
    return r;
  }

  int parity(const Weight& nu) const {
    check(nu);
    return static_cast<int>(nu.c[n_ - 1] % 2);
  }

  // N(nu) = ((nu,nu) - sum c_i (a_i,a_i))/2, an even integer.
  long bigN(const Weight& nu) const {
    check(nu);
    long s = 0;
    for (int i = 0; i < n_; ++i) s += nu.c[i] * b_[i][i];
    return (bilinear(nu, nu) - s) / 2;
  }

  // P(nu) = (p(nu)^2 - sum c_i p(a_i))/2 with p(nu) read as the integer
  // sum c_i p(a_i) = c_n, i.e. P(nu) = c_n(c_n - 1)/2.  Only then is
  // P(mu+nu) = P(mu) + P(nu) + p(mu)p(nu) an exact integer identity; the
  // mod-2 reduction would change P by an even amount, which no sign use
  // can detect but the identity can.
  long bigP(const Weight& nu) const {
    check(nu);
    const long pn = nu.c[n_ - 1];
    return pn * (pn - 1) / 2;
  }

private:
  void check(const Weight& w) const {
    if (static_cast<int>(w.c.size()) != n_)
      throw std::domain_error("weight rank mismatch");
  }

  int n_;
  std::vector<std::vector<int>> a_;
  std::vector<int> s_;
  std::vector<std::vector<int>> b_;
};

// Reduced positive root, either alpha(i,j) = a_i + ... + a_j (i <= j) or
// beta(i,j) = a_i + ... + a_{j-1} + 2a_j + ... + 2a_n (i < j).
struct Root {
  enum class Kind { Alpha, Beta };
  Kind kind;
  int i;
  int j;
  Weight weight;

  bool operator==(const Root&) const = default;

  std::string to_string() const {
    return std::string(kind == Kind::Alpha ? "alpha" : "beta") + "(" +
           std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

inline Root make_alpha(const RootDatum& datum, int i, int j) {
  if (!(1 <= i && i <= j && j <= datum.rank()))
    throw std::domain_error("alpha(i,j) requires 1 <= i <= j <= n");
  Weight w = Weight::zero(datum.rank());
  for (int r = i; r <= j; ++r) w.c[r - 1] = 1;
  return Root{Root::Kind::Alpha, i, j, std::move(w)};
}

inline Root make_beta(const RootDatum& datum, int i, int j) {
  if (!(1 <= i && i < j && j <= datum.rank()))
    throw std::domain_error("beta(i,j) requires 1 <= i < j <= n");
  Weight w = Weight::zero(datum.rank());
  for (int r = i; r < j; ++r) w.c[r - 1] = 1;
  for (int r = j; r <= datum.rank(); ++r) w.c[r - 1] = 2;
  return Root{Root::Kind::Beta, i, j, std::move(w)};
}

// All n^2 reduced positive roots: alphas in (i,j)-lexicographic order, then
// betas.  The ordering is fixed so serialized output is stable.
inline std::vector<Root> reduced_positive_roots(const RootDatum& datum) {
  std::vector<Root> roots;
  const int n = datum.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) roots.push_back(make_alpha(datum, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back(make_beta(datum, i, j));
  return roots;
}

// The full positive system: reduced roots plus the doubles of the odd
// reduced roots, split by parity.
struct FullPositiveRoots {
  std::vector<Weight> full;          // all of (full Phi)^+
  std::vector<Weight> full_even;
  std::vector<Weight> full_odd;
  std::vector<Weight> reduced_even;
  std::vector<Weight> reduced_odd;
};

inline FullPositiveRoots full_positive_roots(const RootDatum& datum) {
  FullPositiveRoots out;
  for (const Root& r : reduced_positive_roots(datum)) {
    out.full.push_back(r.weight);
    if (datum.parity(r.weight) == 0)
      out.reduced_even.push_back(r.weight);
    else
      out.reduced_odd.push_back(r.weight);
  }
  for (const Weight& w : out.reduced_odd) out.full.push_back(2L * w);
  for (const Weight& w : out.full)
    (datum.parity(w) == 0 ? out.full_even : out.full_odd).push_back(w);
  return out;
}

}  // namespace qsh

#endif  // QSH_CARTAN_HPP
