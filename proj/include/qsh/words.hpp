#ifndef QSH_WORDS_HPP
#define QSH_WORDS_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsh/cartan.hpp"
#include "qsh/scalar.hpp"

// Combinatorics on words over I = {1,...,n}: lexicographic order, Lyndon
// words and the canonical factorization, dominant (Lyndon) words and the
// root-word bijection, enumeration of dominant words, and the statistics
// xi, s and varsigma.

namespace qsh {

struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}
  Word(std::initializer_list<int> l) : letters(l) {}

  size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // std::vector's ordering is exactly the lexicographic order with a proper
  // prefix smaller than the full word.
  auto operator<=>(const Word&) const = default;

  Word subword(size_t begin, size_t end) const {
    return Word(std::vector<int>(letters.begin() + begin, letters.begin() + end));
  }

  friend Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }

  Word power(long m) const {
    Word r;
    for (long k = 0; k < m; ++k) r = r + *this;
    return r;
  }

  Word reversed() const {
    Word r = *this;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < letters.size(); ++k) {
      if (k) out << ",";
      out << letters[k];
    }
    out << ")";
    return out.str();
  }
};

inline Weight weight_of(const RootDatum& datum, const Word& w) {
  Weight nu = Weight::zero(datum.rank());
  for (int l : w.letters) {
    if (l < 1 || l > datum.rank())
      throw std::domain_error("letter out of range: " + std::to_string(l));
    nu.c[l - 1] += 1;
  }
  return nu;
}

inline int parity_of(const RootDatum& datum, const Word& w) {
  return datum.parity(weight_of(datum, w));
}

inline int lex_compare(const Word& a, const Word& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

// A word is Lyndon when it is strictly smaller than each of its proper
// right factors.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::domain_error("empty word");
  for (size_t k = 1; k < w.length(); ++k)
    if (!(w < w.subword(k, w.length()))) return false;
  return true;
}

// Duval's algorithm: the unique factorization into a non-increasing product
// of Lyndon words, left to right.
inline std::vector<Word> lyndon_factorize(const Word& w) {
  if (w.empty()) throw std::domain_error("empty word");
  std::vector<Word> factors;
  const auto& s = w.letters;
  size_t k = 0;
  while (k < s.size()) {
    size_t i = k, j = k + 1;
    while (j < s.size() && s[i] <= s[j]) {
      i = (s[i] < s[j]) ? k : i + 1;
      ++j;
    }
    while (k <= i) {
      factors.push_back(w.subword(k, k + j - i));
      k += j - i;
    }
  }
  return factors;
}

// Canonical factorization i_1^{n_1} ... i_d^{n_d} with strictly decreasing
// Lyndon factors and multiplicities >= 1.
struct CanonicalFactorization {
  std::vector<std::pair<Word, long>> factors;

  Word reassemble() const {
    Word w;
    for (auto& [f, m] : factors)
      for (long k = 0; k < m; ++k) w = w + f;
    return w;
  }
};

inline CanonicalFactorization canonical_factorize(const Word& w) {
  CanonicalFactorization cf;
  for (Word& f : lyndon_factorize(w)) {
    if (!cf.factors.empty() && cf.factors.back().first == f)
      cf.factors.back().second += 1;
    else
      cf.factors.emplace_back(std::move(f), 1);
  }
  return cf;
}

// Dominant Lyndon words: (i,...,j) for alpha(i,j) and (i,...,n,n,...,j) for
// beta(i,j).
inline Word iota_plus(const RootDatum& datum, const Root& root) {
  std::vector<int> l;
  if (root.kind == Root::Kind::Alpha) {
    for (int r = root.i; r <= root.j; ++r) l.push_back(r);
  } else {
    for (int r = root.i; r <= datum.rank(); ++r) l.push_back(r);
    for (int r = datum.rank(); r >= root.j; --r) l.push_back(r);
  }
  return Word(std::move(l));
}

inline std::vector<Word> dominant_lyndon_words(const RootDatum& datum) {
  std::vector<Word> out;
  for (const Root& r : reduced_positive_roots(datum))
    out.push_back(iota_plus(datum, r));
  return out;
}

inline bool is_dominant_lyndon(const RootDatum& datum, const Word& w) {
  const int n = datum.rank();
  if (w.empty()) return false;
  const auto& l = w.letters;
  // ascending run i..j
  size_t k = 1;
  while (k < l.size() && l[k] == l[k - 1] + 1) ++k;
  if (k == l.size()) return l.front() >= 1 && l.back() <= n;
  // otherwise must be (i,...,n,n,...,j) with i < j
  if (l[k - 1] != n || l[k] != n) return false;
  size_t m = k + 1;
  while (m < l.size() && l[m] == l[m - 1] - 1) ++m;
  if (m != l.size()) return false;
  const int i = l.front(), j = l.back();
  return i < j && j <= n;
}

inline Root iota_plus_inverse(const RootDatum& datum, const Word& w) {
  if (!is_dominant_lyndon(datum, w))
    throw std::domain_error("not a dominant Lyndon word: " + w.to_string());
  const int i = w.letters.front();
  const int j = w.letters.back();
  const bool beta = w.length() != static_cast<size_t>(j - i + 1);
  return beta ? make_beta(datum, i, j) : make_alpha(datum, i, j);
}

// A word is dominant iff every factor of its canonical factorization is a
// dominant Lyndon word.
inline bool is_dominant(const RootDatum& datum, const Word& w) {
  if (w.empty()) return true;
  for (const Word& f : lyndon_factorize(w))
    if (!is_dominant_lyndon(datum, f)) return false;
  return true;
}

namespace detail {

// Kostant-type partition enumeration: multisets of positive roots summing
// to nu, depth-first over roots in decreasing iota^+ order, memoized on
// (first usable root, remaining weight).
class DominantWordEnumerator {
public:
  explicit DominantWordEnumerator(const RootDatum& datum) : datum_(datum) {
    for (const Root& r : reduced_positive_roots(datum))
      lyndon_.push_back(iota_plus(datum, r));
    std::sort(lyndon_.begin(), lyndon_.end(), std::greater<Word>());
  }

  std::vector<Word> words_of_weight(const Weight& nu) {
    std::vector<Word> out = enumerate(0, nu);
    std::sort(out.begin(), out.end(), std::greater<Word>());
    return out;
  }

private:
  std::vector<Word> enumerate(size_t from, const Weight& remaining) {
    if (remaining.is_zero()) return {Word()};
    if (from == lyndon_.size()) return {};
    auto key = std::make_pair(from, remaining);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Word> out;
    // skip the current root
    for (Word& w : enumerate(from + 1, remaining)) out.push_back(std::move(w));
    // or use it at least once
    Weight rest = remaining;
    bool fits = true;
    const Weight rw = weight_of(datum_, lyndon_[from]);
    for (size_t i = 0; i < rest.c.size(); ++i) {
      rest.c[i] -= rw.c[i];
      if (rest.c[i] < 0) fits = false;
    }
    if (fits)
      for (Word& w : enumerate(from, rest))
        out.push_back(lyndon_[from] + w);
    memo_[key] = out;
    return out;
  }

  const RootDatum& datum_;
  std::vector<Word> lyndon_;
  std::map<std::pair<size_t, Weight>, std::vector<Word>> memo_;
};

}  // namespace detail

// All dominant words of weight nu, in decreasing lexicographic order,
// via root-partition enumeration.
inline std::vector<Word> dominant_words(const RootDatum& datum, const Weight& nu) {
  detail::DominantWordEnumerator e(datum);
  return e.words_of_weight(nu);
}

// All words of weight nu (not only dominant ones), decreasing.
inline std::vector<Word> words_of_weight(const RootDatum& datum, const Weight& nu) {
  std::vector<int> letters;
  for (int i = 1; i <= datum.rank(); ++i)
    for (long k = 0; k < nu.c[i - 1]; ++k) letters.push_back(i);
  std::sort(letters.begin(), letters.end(), std::greater<int>());
  std::vector<Word> out;
  do {
    out.push_back(Word(letters));
  } while (std::prev_permutation(letters.begin(), letters.end()));
  return out;
}

// Independent route: filter all words of the weight through is_dominant.
inline std::vector<Word> dominant_words_by_filter(const RootDatum& datum,
                                                  const Weight& nu) {
  std::vector<Word> out;
  for (Word& w : words_of_weight(datum, nu))
    if (is_dominant(datum, w)) out.push_back(std::move(w));
  return out;
}

// q_i for a Lyndon word: the half-norm exponent (|i|,|i|)/2.
inline long half_norm(const RootDatum& datum, const Word& w) {
  const Weight nu = weight_of(datum, w);
  return datum.bilinear(nu, nu) / 2;
}

inline LaurentPoly qint_of_word(const RootDatum& datum, const Word& w, long m) {
  return super_qint(m, parity_of(datum, w), half_norm(datum, w));
}

inline LaurentPoly qfact_of_word(const RootDatum& datum, const Word& w, long m) {
  return super_qfact(m, parity_of(datum, w), half_norm(datum, w));
}

// xi(i) = sum p(i_k) n_k(n_k-1)/2 and s(i) = sum (|i_k|,|i_k|) n_k(n_k-1)/4
// over the canonical factorization.
inline std::pair<long, long> xi_and_s(const RootDatum& datum, const Word& w) {
  if (!is_dominant(datum, w))
    throw std::domain_error("xi_and_s: word is not dominant: " + w.to_string());
  long xi = 0, s = 0;
  const auto cf = canonical_factorize(w);
  for (auto& [f, m] : cf.factors) {
    xi += parity_of(datum, f) * m * (m - 1) / 2;
    s += datum.bilinear(weight_of(datum, f), weight_of(datum, f)) * m * (m - 1) / 4;
  }
  return {xi, s};
}

// varsigma: the product of super quantum factorials over the canonical
// factorization.  Defined for every nonempty word (the dominance of the
// factors is not needed); the empty word gives 1.
inline LaurentPoly varsigma(const RootDatum& datum, const Word& w) {
  LaurentPoly p(1);
  if (w.empty()) return p;
  const auto cf = canonical_factorize(w);
  for (auto& [f, m] : cf.factors) p *= qfact_of_word(datum, f, m);
  return p;
}

}  // namespace qsh

#endif  // QSH_WORDS_HPP
