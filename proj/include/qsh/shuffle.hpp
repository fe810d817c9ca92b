#ifndef QSH_SHUFFLE_HPP
#define QSH_SHUFFLE_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsh/cartan.hpp"
#include "qsh/scalar.hpp"
#include "qsh/words.hpp"

// The free superalgebra on I with the quantum shuffle product, the
// deconcatenation coproduct, the bilinear form, and the maps tau, bar,
// sigma.

namespace qsh {

// Sparse linear combination of words.  Invariant: no stored zero
// coefficients; words may have mixed weights (homogeneity is checked where
// an operation requires it).
class Element {
public:
  Element() = default;
  explicit Element(const Word& w) { terms_[w] = RationalFunction(1); }
  Element(const Word& w, RationalFunction c) {
    if (!c.is_zero()) terms_[w] = std::move(c);
  }

  const std::map<Word, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  RationalFunction coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_term(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_[w] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element operator-() const {
    Element r;
    for (auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
  }
  Element& operator+=(const Element& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const RationalFunction& c, const Element& x) {
    Element r;
    if (c.is_zero()) return r;
    for (auto& [w, xc] : x.terms_) r.terms_[w] = c * xc;
    return r;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) out << " + ";
      first = false;
      out << "(" << it->second.to_string() << ")" << it->first.to_string();
    }
    return out.str();
  }

private:
  std::map<Word, RationalFunction> terms_;
};

// The common weight of all words of x, if x is homogeneous (zero and the
// scalar multiples of the empty word are homogeneous of weight 0 only when
// a rank is fixed, so the zero element yields nullopt).
inline std::optional<Weight> homogeneous_weight(const RootDatum& datum,
                                                const Element& x) {
  std::optional<Weight> nu;
  for (auto& [w, c] : x.terms()) {
    Weight wt = weight_of(datum, w);
    if (!nu)
      nu = wt;
    else if (*nu != wt)
      return std::nullopt;
  }
  return nu;
}

// Lexicographically largest word of x with its coefficient.
inline std::pair<Word, RationalFunction> max_word(const Element& x) {
  if (x.is_zero()) throw std::domain_error("max_word of zero element");
  auto it = x.terms().rbegin();
  return {it->first, it->second};
}

// Quantum shuffle of two words by direct enumeration of interleavings.
// Each interleaving contributes the product, over pairs (a_s, b_t) with a_s
// placed left of b_t, of (-1)^{p(a_s)p(b_t)} q^{-(alpha_{a_s}, alpha_{b_t})}.
inline Element shuffle_words(const RootDatum& datum, const Word& a,
                             const Word& b) {
  const size_t la = a.length(), lb = b.length();
  const int n = datum.rank();
  // prefix data for a: parity and bilinear pairing of a[0..s) with each letter
  std::vector<int> pref_parity(la + 1, 0);
  std::vector<std::vector<long>> pref_bil(la + 1, std::vector<long>(n + 1, 0));
  for (size_t s = 0; s < la; ++s) {
    const int l = a.letters[s];
    if (l < 1 || l > n) throw std::domain_error("letter out of range");
    pref_parity[s + 1] = pref_parity[s] ^ datum.parity(l);
    for (int j = 1; j <= n; ++j)
      pref_bil[s + 1][j] = pref_bil[s][j] + datum.b(l, j);
  }
  for (int l : b.letters)
    if (l < 1 || l > n) throw std::domain_error("letter out of range");

  std::map<Word, LaurentPoly> acc;
  std::vector<int> buf(la + lb);
  auto rec = [&](auto&& self, size_t ia, size_t ib, long exp, int sign) -> void {
    if (ia == la && ib == lb) {
      acc[Word(buf)].add_term(exp, sign);
      return;
    }
    const size_t pos = ia + ib;
    if (ia < la) {
      buf[pos] = a.letters[ia];
      self(self, ia + 1, ib, exp, sign);
    }
    if (ib < lb) {
      const int j = b.letters[ib];
      buf[pos] = j;
      const int s2 = (pref_parity[ia] & datum.parity(j)) ? -sign : sign;
      self(self, ia, ib + 1, exp - pref_bil[ia][j], s2);
    }
  };
  rec(rec, 0, 0, 0, 1);

  Element r;
  for (auto& [w, p] : acc)
    if (!p.is_zero()) r.add_term(w, RationalFunction(p));
  return r;
}

inline Element shuffle(const RootDatum& datum, const Element& x,
                       const Element& y) {
  Element r;
  for (auto& [u, cu] : x.terms())
    for (auto& [v, cv] : y.terms()) {
      const RationalFunction c = cu * cv;
      const Element s = shuffle_words(datum, u, v);
      for (auto& [w, cw] : s.terms()) r.add_term(w, c * cw);
    }
  return r;
}

inline Element shuffle_power(const RootDatum& datum, const Element& x, long m) {
  Element r(Word{});
  for (long k = 0; k < m; ++k) r = shuffle(datum, r, x);
  return r;
}

// Literal unfolding of the defining recursion
//   (xi) <> (yj) = (x <> (yj)) i  +  (-1)^{p(xi)p(j)} q^{-(|xi|,|j|)} ((xi) <> y) j,
// kept as a differential-test oracle against the interleaving enumeration.
class ShuffleRecursionOracle {
public:
  explicit ShuffleRecursionOracle(const RootDatum& datum) : datum_(datum) {}

  Element shuffle(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Element r;
    if (a.empty()) {
      r = Element(b);
    } else if (b.empty()) {
      r = Element(a);
    } else {
      const int i = a.letters.back();
      const int j = b.letters.back();
      const Word x = a.subword(0, a.length() - 1);
      const Word y = b.subword(0, b.length() - 1);
      const Element left = shuffle(x, b);
      for (auto& [w, c] : left.terms()) r.add_term(w + Word{i}, c);
      const Weight wa = weight_of(datum_, a);
      long sign = (datum_.parity(wa) & datum_.parity(datum_.simple(j))) ? -1 : 1;
      const RationalFunction f(LaurentPoly::monomial(
          sign, -datum_.bilinear(wa, datum_.simple(j))));
      const Element right = shuffle(a, y);
      for (auto& [w, c] : right.terms()) r.add_term(w + Word{j}, f * c);
    }
    memo_[key] = r;
    return r;
  }

private:
  const RootDatum& datum_;
  std::map<std::pair<Word, Word>, Element> memo_;
};

// Deconcatenation coproduct values: map (left tensor factor, right tensor
// factor) -> coefficient.
class TensorElement {
public:
  using Key = std::pair<Word, Word>;

  const std::map<Key, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coeff(const Word& u, const Word& v) const {
    auto it = terms_.find({u, v});
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_term(const Word& u, const Word& v, const RationalFunction& c) {
    if (c.is_zero()) return;
    Key k{u, v};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
  std::map<Key, RationalFunction> terms_;
};

// Delta(i_1,...,i_d) = sum_k (i_{k+1},...,i_d) (x) (i_1,...,i_k).
inline TensorElement coproduct(const Element& x) {
  TensorElement r;
  for (auto& [w, c] : x.terms())
    for (size_t k = 0; k <= w.length(); ++k)
      r.add_term(w.subword(k, w.length()), w.subword(0, k), c);
  return r;
}

// tau: linear over the scalars, reverses each word.
inline Element map_tau(const Element& x) {
  Element r;
  for (auto& [w, c] : x.terms()) r.add_term(w.reversed(), c);
  return r;
}

namespace detail {

// For a word of weight nu the pair-sums over s < t of p(i_s)p(i_t) and of
// (alpha_{i_s}, alpha_{i_t}) depend on nu only: the parity sum is congruent
// mod 2 to P(nu), and the bilinear sum equals N(nu).
inline RationalFunction bar_word_factor(const RootDatum& datum, const Weight& nu) {
  const long sign = (datum.bigP(nu) % 2 != 0) ? -1 : 1;
  return RationalFunction(LaurentPoly::monomial(sign, -datum.bigN(nu)));
}

}  // namespace detail

// bar: q -> -q^{-1} on coefficients, and on a word of weight nu
//   i -> (-1)^{P(nu)} q^{-N(nu)} reversed(i).
inline Element map_bar(const RootDatum& datum, const Element& x) {
  Element r;
  for (auto& [w, c] : x.terms())
    r.add_term(w.reversed(),
               c.bar() * detail::bar_word_factor(datum, weight_of(datum, w)));
  return r;
}

// sigma = bar after tau: fixes each word up to the same scalar factor.
inline Element map_sigma(const RootDatum& datum, const Element& x) {
  Element r;
  for (auto& [w, c] : x.terms())
    r.add_term(w, c.bar() * detail::bar_word_factor(datum, weight_of(datum, w)));
  return r;
}

// Root vector attached to a reduced positive root, a scalar multiple of the
// corresponding dominant Lyndon word:
//   E_{(i,...,j)}     = (-1)^{j-i} (q^2-q^-2)^{j-i}   q^{-N} (i,...,j)
//   E_{(i,..,n,n,..,j)} = (-1)^{j-i} (q^2-q^-2)^{2n-i-j} q^{-N} [2]_n^{-1} (word)
inline Element pbw_lyndon(const RootDatum& datum, const Root& root) {
  const Word w = iota_plus(datum, root);
  const long N = datum.bigN(weight_of(datum, w));
  const LaurentPoly base = LaurentPoly::q_power(2) - LaurentPoly::q_power(-2);
  long e = (root.kind == Root::Kind::Alpha) ? (root.j - root.i)
                                            : (2 * datum.rank() - root.i - root.j);
  LaurentPoly num(((root.j - root.i) % 2 != 0) ? -1 : 1);
  for (long k = 0; k < e; ++k) num *= base;
  RationalFunction c(num.shifted(-N));
  if (root.kind == Root::Kind::Beta)
    c = c / RationalFunction(super_qint(2, 1, 1));
  return Element(w, c);
}

namespace detail {

// Gaussian elimination over the scalar fraction field.  Solves A c = y with
// free variables set to zero; nullopt when inconsistent.
inline std::optional<std::vector<RationalFunction>> solve_linear(
    std::vector<std::vector<RationalFunction>> a,
    std::vector<RationalFunction> y) {
  const size_t m = a.size();
  const size_t cols = m == 0 ? 0 : a[0].size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m; ++col) {
    size_t sel = row;
    while (sel < m && a[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    std::swap(y[sel], y[row]);
    const RationalFunction inv = RationalFunction(1) / a[row][col];
    for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
    y[row] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const RationalFunction f = a[r][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      y[r] -= f * y[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < m; ++r)
    if (!y[r].is_zero()) return std::nullopt;
  std::vector<RationalFunction> c(cols);
  for (size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = y[r];
  return c;
}

}  // namespace detail

// Bilinear form engine.  The form is the unique one with (empty,empty) = 1,
// (i,j) = delta_{ij} and the adjunction (x, y<>z) = (Delta x, y (x) z); these
// force, for v = (v_1,...,v_k) and T_v := (v_k) <> ... <> (v_1),
//   (u, T_v) = delta_{uv}  for every word u.
// Hence for y = sum_v c_v T_v in the span of letter products, (x, y) equals
// sum_v c_v x_v for any x; that span is exactly the embedded algebra, whose
// elements are detected by the solvability of the linear system.  Values
// against arbitrary elements of the algebra are assembled from chains of
// root vectors via the adjunction and the orthogonal root-vector expansion;
// all per-weight data is memoized.
class FormCache {
public:
  explicit FormCache(const RootDatum& datum) : datum_(datum) {}

  const RootDatum& datum() const { return datum_; }

  const std::vector<Word>& words(const Weight& nu) {
    auto it = all_words_.find(nu);
    if (it == all_words_.end())
      it = all_words_.emplace(nu, words_of_weight(datum_, nu)).first;
    return it->second;
  }

  const std::vector<Word>& dominant(const Weight& nu) {
    auto it = dominant_.find(nu);
    if (it == dominant_.end())
      it = dominant_.emplace(nu, dominant_words(datum_, nu)).first;
    return it->second;
  }

  // T_v = (v_k) <> ... <> (v_1).
  const Element& t_vector(const Word& v) {
    auto it = tvec_.find(v);
    if (it != tvec_.end()) return it->second;
    Element r(Word{});
    for (size_t k = v.length(); k-- > 0;)
      r = qsh::shuffle(datum_, r, Element(Word{v.letters[k]}));
    return tvec_.emplace(v, std::move(r)).first->second;
  }

  // Covector of y against the word basis: (x, y) = sum_u cov[u] * x_u.
  // Requires y in the embedded algebra; throws otherwise.
  std::map<Word, RationalFunction> form_covector(const Element& y) {
    const auto nu = homogeneous_weight(datum_, y);
    if (!nu) {
      if (y.is_zero()) return {};
      throw std::domain_error("form_covector: element is not homogeneous");
    }
    const std::vector<Word>& ws = words(*nu);
    const size_t m = ws.size();
    std::map<Word, size_t> index;
    for (size_t k = 0; k < m; ++k) index[ws[k]] = k;
    std::vector<std::vector<RationalFunction>> a(
        m, std::vector<RationalFunction>(m));
    for (size_t c = 0; c < m; ++c)
      for (auto& [u, cu] : t_vector(ws[c]).terms()) a[index.at(u)][c] = cu;
    std::vector<RationalFunction> rhs(m);
    for (auto& [u, cu] : y.terms()) rhs[index.at(u)] = cu;
    auto sol = detail::solve_linear(std::move(a), std::move(rhs));
    if (!sol)
      throw std::domain_error(
          "bilinear form: element lies outside the embedded algebra");
    std::map<Word, RationalFunction> cov;
    for (size_t k = 0; k < m; ++k)
      if (!(*sol)[k].is_zero()) cov[ws[k]] = (*sol)[k];
    return cov;
  }

  // Covector of the root vector E_l for a dominant Lyndon word l, cached.
  const std::map<Word, RationalFunction>& lyndon_covector(const Word& l) {
    auto it = lyndon_cov_.find(l);
    if (it != lyndon_cov_.end()) return it->second;
    const Element e = pbw_lyndon(datum_, iota_plus_inverse(datum_, l));
    return lyndon_cov_.emplace(l, form_covector(e)).first->second;
  }

  // (E_l, E_l) for a dominant Lyndon word l.
  const RationalFunction& lyndon_norm(const Word& l) {
    auto it = lyndon_norm_.find(l);
    if (it != lyndon_norm_.end()) return it->second;
    const Element e = pbw_lyndon(datum_, iota_plus_inverse(datum_, l));
    const auto& cov = lyndon_covector(l);
    RationalFunction r;
    for (auto& [u, cu] : e.terms()) {
      auto jt = cov.find(u);
      if (jt != cov.end()) r += cu * jt->second;
    }
    return lyndon_norm_.emplace(l, std::move(r)).first->second;
  }

  // (x, E_i) for a dominant word i via the adjunction: the product
  // E_i = E_{i_d}^{(n_d)} <> ... <> E_{i_1}^{(n_1)} is peeled one root
  // vector at a time, pairing suffixes of the words of x against the
  // root-vector covector at its own small weight.
  RationalFunction form_against_pbw(const Element& x, const Word& dominant) {
    const auto cf = canonical_factorize(dominant);
    Element cur = x;
    LaurentPoly den(1);
    for (auto kt = cf.factors.rbegin(); kt != cf.factors.rend(); ++kt) {
      const auto& [l, mult] = *kt;
      den *= qfact_of_word(datum_, l, mult);
      const auto& cov = lyndon_covector(l);
      const size_t len = l.length();
      for (long rep = 0; rep < mult; ++rep) {
        Element next;
        for (auto& [u, cu] : cur.terms()) {
          if (u.length() < len) continue;
          auto jt = cov.find(u.subword(u.length() - len, u.length()));
          if (jt == cov.end()) continue;
          next.add_term(u.subword(0, u.length() - len), cu * jt->second);
        }
        cur = std::move(next);
        if (cur.is_zero()) break;
      }
      if (cur.is_zero()) break;
    }
    return cur.coeff(Word{}) / RationalFunction(den);
  }

  // (E_i, E_i) by the closed product formula over the canonical
  // factorization, with Lyndon norms from the linear solves.
  const RationalFunction& pbw_norm_closed(const Word& dominant) {
    auto it = pbw_norm_.find(dominant);
    if (it != pbw_norm_.end()) return it->second;
    const auto [xi, s] = xi_and_s(datum_, dominant);
    RationalFunction r(LaurentPoly::monomial((xi % 2 != 0) ? -1 : 1, -s));
    const auto cf = canonical_factorize(dominant);
    for (auto& [l, mult] : cf.factors) {
      const RationalFunction& ln = lyndon_norm(l);
      for (long k = 0; k < mult; ++k) r *= ln;
      r /= RationalFunction(qfact_of_word(datum_, l, mult));
    }
    return pbw_norm_.emplace(dominant, std::move(r)).first->second;
  }

  // The form on x, y with y (and for a symmetric answer also x) in the
  // embedded algebra, assembled through the orthogonal root-vector basis.
  RationalFunction bilinear_form(const Element& x, const Element& y) {
    if (x.is_zero() || y.is_zero()) return RationalFunction();
    const auto wx = homogeneous_weight(datum_, x);
    const auto wy = homogeneous_weight(datum_, y);
    if (!wx || !wy)
      throw std::domain_error("bilinear_form: inhomogeneous argument");
    if (*wx != *wy) return RationalFunction();
    RationalFunction r;
    for (const Word& d : dominant(*wx)) {
      const RationalFunction cy = form_against_pbw(y, d);
      if (cy.is_zero()) continue;
      const RationalFunction cx = form_against_pbw(x, d);
      if (cx.is_zero()) continue;
      r += cx * cy / pbw_norm_closed(d);
    }
    return r;
  }

  // Gram matrix of the letter products: M[r][c] = (T_{w_r}, T_{w_c}), which
  // the adjunction identifies with the coefficient of w_c in T_{w_r}.
  std::vector<std::vector<LaurentPoly>> gram_matrix(const Weight& nu) {
    const std::vector<Word>& ws = words(nu);
    const size_t m = ws.size();
    std::vector<std::vector<LaurentPoly>> g(m, std::vector<LaurentPoly>(m));
    for (size_t r = 0; r < m; ++r) {
      const Element& t = t_vector(ws[r]);
      for (size_t c = 0; c < m; ++c) {
        const RationalFunction v = t.coeff(ws[c]);
        if (!v.is_laurent())
          throw std::domain_error("gram matrix entry is not Laurent");
        g[r][c] = v.as_laurent();
      }
    }
    return g;
  }

  bool gram_symmetric(const Weight& nu) {
    const auto g = gram_matrix(nu);
    for (size_t r = 0; r < g.size(); ++r)
      for (size_t c = r + 1; c < g.size(); ++c)
        if (g[r][c] != g[c][r]) return false;
    return true;
  }

  // The form on the weight space is nondegenerate iff the Gram matrix of
  // the spanning set {T_v} has rank equal to the dimension, which is the
  // number of dominant words.  Rank of the evaluated matrix at a rational
  // point is a lower bound for the symbolic rank, and the dimension is an
  // upper bound, so one successful evaluation is a certificate.
  bool gram_nondegenerate(const Weight& nu) {
    const auto g = gram_matrix(nu);
    const size_t target = dominant(nu).size();
    static const std::pair<long, long> points[] = {{3, 5}, {7, 3}, {13, 9}};
    for (auto [num, den] : points)
      if (evaluated_rank(g, mpq_class(num, den)) == target) return true;
    return false;
  }

private:
  static size_t evaluated_rank(const std::vector<std::vector<LaurentPoly>>& g,
                               const mpq_class& q0) {
    const size_t m = g.size();
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m));
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < m; ++c) {
        mpq_class v = 0;
        for (auto& [e, coef] : g[r][c].terms()) {
          mpq_class p = 1;
          for (long k = 0; k < std::abs(e); ++k) p *= q0;
          if (e < 0) p = 1 / p;
          v += mpq_class(coef) * p;
        }
        a[r][c] = v;
      }
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < m; ++col) {
      size_t sel = rank;
      while (sel < m && a[sel][col] == 0) ++sel;
      if (sel == m) continue;
      std::swap(a[sel], a[rank]);
      for (size_t r = rank + 1; r < m; ++r) {
        if (a[r][col] == 0) continue;
        mpq_class f = a[r][col] / a[rank][col];
        for (size_t c = col; c < m; ++c) a[r][c] -= f * a[rank][c];
      }
      ++rank;
    }
    return rank;
  }

  const RootDatum& datum_;
  std::map<Weight, std::vector<Word>> all_words_;
  std::map<Weight, std::vector<Word>> dominant_;
  std::map<Word, Element> tvec_;
  std::map<Word, std::map<Word, RationalFunction>> lyndon_cov_;
  std::map<Word, RationalFunction> lyndon_norm_;
  std::map<Word, RationalFunction> pbw_norm_;
};

}  // namespace qsh

#endif  // QSH_SHUFFLE_HPP
