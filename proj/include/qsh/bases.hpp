#ifndef QSH_BASES_HPP
#define QSH_BASES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsh/cartan.hpp"
#include "qsh/scalar.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/words.hpp"

// PBW, dual PBW, and dual canonical bases of the embedded algebra per
// weight, plus the leading-coefficient statistics kappa and the lattice
// membership test.

namespace qsh {

// E*_l for a dominant Lyndon word l: the word itself for an alpha word,
// [2]_n times the word for a beta word.
inline Element dual_pbw_lyndon(const RootDatum& datum, const Root& root) {
  const Word w = iota_plus(datum, root);
  if (root.kind == Root::Kind::Alpha) return Element(w);
  return Element(w, RationalFunction(super_qint(2, 1, 1)));
}

namespace detail {

inline void require_dominant(const RootDatum& datum, const Word& w,
                             const char* who) {
  if (!is_dominant(datum, w))
    throw std::domain_error(std::string(who) +
                            ": word is not dominant: " + w.to_string());
}

}  // namespace detail

// E_i = E_{i_d}^{(n_d)} <> ... <> E_{i_1}^{(n_1)} over the canonical
// factorization, with divided powers E^{(m)} = E^{<>m}/[m]!.
inline Element pbw(const RootDatum& datum, const Word& w) {
  detail::require_dominant(datum, w, "pbw");
  const auto cf = canonical_factorize(w);
  Element r(Word{});
  for (auto kt = cf.factors.rbegin(); kt != cf.factors.rend(); ++kt) {
    const auto& [l, mult] = *kt;
    Element p = shuffle_power(
        datum, pbw_lyndon(datum, iota_plus_inverse(datum, l)), mult);
    p = (RationalFunction(1) /
         RationalFunction(qfact_of_word(datum, l, mult))) *
        p;
    r = shuffle(datum, r, p);
  }
  return r;
}

// E*_i = (-1)^{xi} q^{s} (E*_{i_d})^{<>n_d} <> ... <> (E*_{i_1})^{<>n_1}.
inline Element dual_pbw(const RootDatum& datum, const Word& w) {
  detail::require_dominant(datum, w, "dual_pbw");
  const auto cf = canonical_factorize(w);
  Element r(Word{});
  for (auto kt = cf.factors.rbegin(); kt != cf.factors.rend(); ++kt) {
    const auto& [l, mult] = *kt;
    r = shuffle(datum, r,
                shuffle_power(
                    datum, dual_pbw_lyndon(datum, iota_plus_inverse(datum, l)),
                    mult));
  }
  const auto [xi, s] = xi_and_s(datum, w);
  return RationalFunction(LaurentPoly::monomial((xi % 2 != 0) ? -1 : 1, s)) * r;
}

// (E_i, E_i), computed both through the adjunction chain against the
// expanded E_i and by the closed product formula; the two must agree.
inline RationalFunction pbw_norm(FormCache& cache, const Word& w) {
  detail::require_dominant(cache.datum(), w, "pbw_norm");
  const RationalFunction direct =
      cache.form_against_pbw(pbw(cache.datum(), w), w);
  const RationalFunction closed = cache.pbw_norm_closed(w);
  if (direct != closed)
    throw std::domain_error("pbw_norm: the two routes disagree at " +
                            w.to_string() + ": " + direct.to_string() +
                            " vs " + closed.to_string());
  return direct;
}

// Beta-root Lyndon factors in the canonical factorization, counted with
// multiplicity.
inline long beta_multiplicity(const RootDatum& datum, const Word& w) {
  long m = 0;
  const auto cf = canonical_factorize(w);
  for (auto& [l, mult] : cf.factors)
    if (iota_plus_inverse(datum, l).kind == Root::Kind::Beta) m += mult;
  return m;
}

// The dual root vector at a beta root exists in two normalizations: the
// closed form [2]_n i underlying dual_pbw, and E_i/(E_i,E_i) with the norm
// of the adjunction-determined form.  They differ by q^2 - q^-2 per beta
// factor, a fixed gap between the two conventions.  This verifies the exact
// relation and returns the closed-normalization element.
inline Element dual_pbw_checked(FormCache& cache, const Word& w) {
  const Element a = dual_pbw(cache.datum(), w);
  Element b =
      (RationalFunction(1) / pbw_norm(cache, w)) * pbw(cache.datum(), w);
  LaurentPoly gap(1);
  const LaurentPoly step =
      LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
  for (long k = 0; k < beta_multiplicity(cache.datum(), w); ++k) gap *= step;
  if ((RationalFunction(gap) * a) != b)
    throw std::domain_error("dual_pbw: the two routes disagree at " +
                            w.to_string());
  return a;
}

// kappa_i = prod kappa_{i_k}^{n_k} [n_k]_{i_k}! with kappa of a Lyndon word
// equal to 1 (alpha word) or [2]_n (beta word).
inline LaurentPoly kappa(const RootDatum& datum, const Word& w) {
  detail::require_dominant(datum, w, "kappa");
  LaurentPoly r(1);
  const auto cf = canonical_factorize(w);
  for (auto& [l, mult] : cf.factors) {
    if (iota_plus_inverse(datum, l).kind == Root::Kind::Beta) {
      const LaurentPoly two = super_qint(2, 1, 1);
      for (long k = 0; k < mult; ++k) r *= two;
    }
    r *= qfact_of_word(datum, l, mult);
  }
  return r;
}

// Coefficient-wise q -> -q^{-1}, words fixed.  This is the involution whose
// fixed points single out the dual canonical basis; it differs from the
// algebra map map_bar.
inline Element bar_coefficientwise(const Element& x) {
  Element r;
  for (auto& [w, c] : x.terms()) r.add_term(w, c.bar());
  return r;
}

struct DualCanonicalBasis {
  // dominant word -> b* element, word coefficients bar-invariant Laurent
  std::map<Word, Element> basis;
  // (i, j) -> coefficient of E*_j in b*_i for j distinct from i, in qZ[q]
  std::map<std::pair<Word, Word>, LaurentPoly> transition;
};

// Bar-invariance correction from the dual PBW basis: for each dominant word
// (largest first) repeatedly cancel the largest bar-asymmetric word by a
// qZ[q] multiple of the dual PBW element at that word.  Unitriangularity
// holds because each leading coefficient kappa is bar-invariant.
inline DualCanonicalBasis dual_canonical(const RootDatum& datum,
                                         const Weight& nu) {
  DualCanonicalBasis out;
  const std::vector<Word> dws = dominant_words(datum, nu);
  std::map<Word, Element> estar;
  for (const Word& d : dws) estar[d] = dual_pbw(datum, d);
  for (const Word& top : dws) {
    Element x = estar.at(top);
    for (size_t guard = 0; guard <= dws.size(); ++guard) {
      const Element r = bar_coefficientwise(x) - x;
      if (r.is_zero()) break;
      if (guard == dws.size())
        throw std::domain_error("dual_canonical: correction did not terminate");
      const auto [j, rj] = max_word(r);
      if (!(j < top))
        throw std::domain_error("dual_canonical: triangularity failed at " +
                                top.to_string());
      auto it = estar.find(j);
      if (it == estar.end())
        throw std::domain_error(
            "dual_canonical: bar defect at a non-dominant word " +
            j.to_string());
      // r_j = (bar(c) - c) kappa_j must hold for the correction c, so
      // d := r_j / kappa_j satisfies bar(d) = -d and c is the positive part.
      if (!rj.is_laurent())
        throw std::domain_error("dual_canonical: non-Laurent defect");
      const auto d = exact_divide(rj.as_laurent(), kappa(datum, j));
      if (!d)
        throw std::domain_error("dual_canonical: defect not divisible by kappa");
      if (d->bar() != -*d || d->coeff(0) != 0)
        throw std::domain_error("dual_canonical: defect is not antisymmetric");
      LaurentPoly c;
      for (auto& [e, co] : d->terms())
        if (e > 0) c.add_term(e, co);
      x += RationalFunction(c) * it->second;
      auto key = std::make_pair(top, j);
      out.transition[key] += c;
    }
    out.basis[top] = std::move(x);
  }
  return out;
}

// Membership in the lattice spanned by varsigma_u * u over Laurent scalars:
// every coefficient must be a Laurent polynomial divisible by the varsigma
// of its word.
inline bool lattice_check(const RootDatum& datum, const Element& x) {
  for (auto& [w, c] : x.terms()) {
    if (!c.is_laurent()) return false;
    if (!exact_divide(c.as_laurent(), varsigma(datum, w))) return false;
  }
  return true;
}

// Shuffle power of a single word with Laurent coefficients; a low-overhead
// path for large Lyndon-power expansions.
inline std::map<Word, LaurentPoly> shuffle_word_power(const RootDatum& datum,
                                                      const Word& w, long m) {
  std::map<Word, LaurentPoly> cur;
  cur[Word{}] = LaurentPoly(1);
  for (long k = 0; k < m; ++k) {
    std::map<Word, LaurentPoly> next;
    for (auto& [u, cu] : cur) {
      const Element s = shuffle_words(datum, u, w);
      for (auto& [v, cv] : s.terms()) {
        LaurentPoly t = cu * cv.as_laurent();
        auto it = next.find(v);
        if (it == next.end())
          next.emplace(v, std::move(t));
        else
          it->second += t;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Every word coefficient of E*_{l^m} is bar-invariant; by uniqueness this
// is exactly the statement b* = E* at the Lyndon power l^m.  Streams over
// the expansion so large powers avoid rational-function overhead.
inline bool lyndon_power_dual_bar_invariant(const RootDatum& datum,
                                            const Word& lyndon, long m) {
  const Root root = iota_plus_inverse(datum, lyndon);
  const auto [xi, s] = xi_and_s(datum, lyndon.power(m));
  LaurentPoly scalar = LaurentPoly::monomial((xi % 2 != 0) ? -1 : 1, s);
  if (root.kind == Root::Kind::Beta) {
    const LaurentPoly two = super_qint(2, 1, 1);
    for (long k = 0; k < m; ++k) scalar *= two;
  }
  for (auto& [u, c] : shuffle_word_power(datum, lyndon, m)) {
    const LaurentPoly full = scalar * c;
    if (full.bar() != full) return false;
  }
  return true;
}

}  // namespace qsh

#endif  // QSH_BASES_HPP
