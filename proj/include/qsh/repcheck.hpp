#ifndef QSH_REPCHECK_HPP
#define QSH_REPCHECK_HPP

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsh/bases.hpp"
#include "qsh/cartan.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/words.hpp"

// Spin quiver Hecke algebra data: Q-polynomials, graded super-modules with
// explicit generator matrices, the relation verifier, graded characters,
// cuspidal modules, and standard-module characters.

namespace qsh {

using Mat = std::vector<std::vector<mpq_class>>;

inline Mat zero_mat(size_t n) { return Mat(n, std::vector<mpq_class>(n, 0)); }

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat r = zero_mat(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline Mat mat_add(Mat a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

inline Mat mat_sub(Mat a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

inline Mat mat_scale(long s, Mat a) {
  for (auto& row : a)
    for (auto& x : row) x *= s;
  return a;
}

// Quiver orientation data on the Dynkin diagram: d[i][j] counts arrow
// orbits i -> j.  Adjacent pairs carry exactly one arrow; non-adjacent
// pairs none.
struct QuiverData {
  enum class Orientation { Up, Down };

  explicit QuiverData(const RootDatum& datum,
                      Orientation o = Orientation::Up)
      : datum_(&datum), d_(datum.rank() + 1, std::vector<int>(datum.rank() + 1, 0)) {
    for (int i = 1; i < datum.rank(); ++i) {
      if (o == Orientation::Up)
        d_[i][i + 1] = 1;
      else
        d_[i + 1][i] = 1;
    }
  }

  const RootDatum& datum() const { return *datum_; }
  int d(int i, int j) const { return d_[i][j]; }
  bool adjacent(int i, int j) const {
    return i != j && datum_->cartan(i, j) != 0;
  }

  // Exponent of u in Q_{ij}: 2/s_i, which is 1 for even letters and 2 for
  // the odd letter n.
  int u_exponent(int i) const { return 2 / datum_->symmetrizer(i); }

 private:
  const RootDatum* datum_;
  std::vector<std::vector<int>> d_;
};

struct BasisVector {
  std::string label;
  long deg = 0;
  int parity = 0;
  Word block;
};

struct GradedSuperModule {
  Weight nu;
  std::vector<BasisVector> basis;
  std::vector<Mat> y;    // y_1 .. y_d
  std::vector<Mat> tau;  // tau_1 .. tau_{d-1}

  size_t dim() const { return basis.size(); }
  long positions() const { return nu.height(); }
};

struct VerifyReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }

  std::string to_string() const {
    std::ostringstream out;
    if (ok())
      out << "all relations pass";
    else
      for (auto& v : violations) out << "violation: " << v << "\n";
    for (auto& w : warnings) out << "warning: " << w << "\n";
    return out.str();
  }
};

namespace detail {

inline Word swap_at(const Word& w, size_t r) {  // r is 1-based
  Word s = w;
  std::swap(s.letters[r - 1], s.letters[r]);
  return s;
}

// Q_{ij}(A, B) = (-1)^{d_ij}(A^{2/s_i} - B^{2/s_j}) as a matrix; Q_ii = 0.
inline Mat q_poly_eval(const QuiverData& q, int i, int j, const Mat& a,
                       const Mat& b) {
  if (i == j) return zero_mat(a.size());
  const Mat au = q.u_exponent(i) == 2 ? mat_mul(a, a) : a;
  const Mat bv = q.u_exponent(j) == 2 ? mat_mul(b, b) : b;
  Mat r = mat_sub(au, bv);
  if (q.d(i, j) % 2 != 0) r = mat_scale(-1, std::move(r));
  return r;
}

}  // namespace detail

// The Q-polynomial as a display string, exponents per the symmetrizer.
inline std::string q_polynomial_text(const QuiverData& q, int i, int j) {
  if (i == j) return "0";
  auto pw = [](const char* v, int e) {
    return e == 1 ? std::string(v) : std::string(v) + "^2";
  };
  const std::string body =
      pw("u", q.u_exponent(i)) + " - " + pw("v", q.u_exponent(j));
  return q.d(i, j) % 2 != 0 ? "-(" + body + ")" : "(" + body + ")";
}

// Exact block-by-block verification of the defining relations plus the
// degree/parity homogeneity of the generator matrices.
inline VerifyReport verify_relations(const GradedSuperModule& m,
                                     const QuiverData& quiver) {
  VerifyReport rep;
  const RootDatum& datum = quiver.datum();
  const long d = m.positions();
  const size_t dim = m.dim();

  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (static_cast<long>(m.y.size()) != d || static_cast<long>(m.tau.size()) != d - 1) {
    fail("generator count mismatch: need " + std::to_string(d) + " y and " +
         std::to_string(d - 1) + " tau matrices");
    return rep;
  }
  for (auto* fam : {&m.y, &m.tau})
    for (auto& mat : *fam) {
      if (mat.size() != dim) throw std::domain_error("matrix dimension mismatch");
      for (auto& row : mat)
        if (row.size() != dim) throw std::domain_error("matrix dimension mismatch");
    }
  for (auto& b : m.basis) {
    if (static_cast<long>(b.block.length()) != d ||
        !(weight_of(datum, b.block) == m.nu))
      fail("basis vector " + b.label + " has block " + b.block.to_string() +
           " outside I^nu");
  }
  if (!rep.ok()) return rep;

  auto letter = [&](size_t col, long r) {  // r is 1-based position
    return m.basis[col].block.letters[r - 1];
  };
  auto parity = [&](int i) { return datum.parity(i); };

  // homogeneity and the block constraints (relations (2) and (3))
  for (long r = 1; r <= d; ++r)
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = 0; b < dim; ++b) {
        if (m.y[r - 1][a][b] == 0) continue;
        const int ir = letter(b, r);
        if (m.basis[a].block != m.basis[b].block)
          fail("relation (2): y_" + std::to_string(r) + " moves " +
               m.basis[b].label + " across blocks");
        else if (m.basis[a].deg != m.basis[b].deg + datum.b(ir, ir) ||
                 m.basis[a].parity != (m.basis[b].parity + parity(ir)) % 2)
          fail("homogeneity: y_" + std::to_string(r) + " entry " +
               m.basis[a].label + " <- " + m.basis[b].label +
               " violates the degree/parity shift");
      }
  for (long r = 1; r < d; ++r)
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = 0; b < dim; ++b) {
        if (m.tau[r - 1][a][b] == 0) continue;
        const int ir = letter(b, r), ir1 = letter(b, r + 1);
        if (m.basis[a].block != detail::swap_at(m.basis[b].block, r))
          fail("relation (3): tau_" + std::to_string(r) + " entry " +
               m.basis[a].label + " <- " + m.basis[b].label +
               " lands in the wrong block");
        else if (m.basis[a].deg != m.basis[b].deg - datum.b(ir, ir1) ||
                 m.basis[a].parity !=
                     (m.basis[b].parity + parity(ir) * parity(ir1)) % 2)
          fail("homogeneity: tau_" + std::to_string(r) + " entry " +
               m.basis[a].label + " <- " + m.basis[b].label +
               " violates the degree/parity shift");
      }

  // check that M e(i)-columns of lhs-rhs vanish; witness = first bad column
  auto check_blockwise = [&](const Mat& lhs, const Mat& rhs, auto&& block_pred,
                             const std::string& what) {
    const Mat diff = mat_sub(lhs, rhs);
    for (size_t b = 0; b < dim; ++b) {
      if (!block_pred(b)) continue;
      for (size_t a = 0; a < dim; ++a)
        if (diff[a][b] != 0) {
          fail(what + ", witness basis vector " + m.basis[b].label +
               " in block " + m.basis[b].block.to_string());
          return;
        }
    }
  };
  auto all_cols = [](size_t) { return true; };

  // relation (4)
  for (long r = 1; r <= d; ++r)
    for (long s = r + 1; s <= d; ++s)
      // the sign depends on the block, so split columns by it
      for (int par : {0, 1}) {
        auto pred = [&](size_t b) {
          return parity(letter(b, r)) * parity(letter(b, s)) == par;
        };
        check_blockwise(
            mat_mul(m.y[r - 1], m.y[s - 1]),
            mat_scale(par ? -1 : 1, mat_mul(m.y[s - 1], m.y[r - 1])), pred,
            "relation (4) at r=" + std::to_string(r) +
                ", s=" + std::to_string(s));
      }

  // relation (5)
  for (long r = 1; r < d; ++r)
    for (long s = 1; s <= d; ++s) {
      if (s == r || s == r + 1) continue;
      for (int par : {0, 1}) {
        auto pred = [&](size_t b) {
          return parity(letter(b, r)) * parity(letter(b, r + 1)) *
                     parity(letter(b, s)) ==
                 par;
        };
        check_blockwise(mat_mul(m.tau[r - 1], m.y[s - 1]),
                        mat_scale(par ? -1 : 1, mat_mul(m.y[s - 1], m.tau[r - 1])),
                        pred,
                        "relation (5) at r=" + std::to_string(r) +
                            ", s=" + std::to_string(s));
      }
    }

  // relation (6)
  for (long r = 1; r < d; ++r)
    for (long s = r + 2; s < d; ++s)
      for (int par : {0, 1}) {
        auto pred = [&](size_t b) {
          return parity(letter(b, r)) * parity(letter(b, r + 1)) *
                     parity(letter(b, s)) * parity(letter(b, s + 1)) ==
                 par;
        };
        check_blockwise(mat_mul(m.tau[r - 1], m.tau[s - 1]),
                        mat_scale(par ? -1 : 1, mat_mul(m.tau[s - 1], m.tau[r - 1])),
                        pred,
                        "relation (6) at r=" + std::to_string(r) +
                            ", s=" + std::to_string(s));
      }

  // relations (7) and (8)
  for (long r = 1; r < d; ++r)
    for (int par : {0, 1})
      for (int equal : {0, 1}) {
        auto pred = [&](size_t b) {
          return parity(letter(b, r)) * parity(letter(b, r + 1)) == par &&
                 (letter(b, r) == letter(b, r + 1)) == (equal == 1);
        };
        Mat rhs7 = mat_scale(par ? -1 : 1, mat_mul(m.y[r - 1], m.tau[r - 1]));
        Mat rhs8 = mat_scale(par ? -1 : 1, mat_mul(m.tau[r - 1], m.y[r - 1]));
        if (equal)
          for (size_t k = 0; k < dim; ++k) {
            rhs7[k][k] += 1;
            rhs8[k][k] += 1;
          }
        check_blockwise(mat_mul(m.tau[r - 1], m.y[r]), rhs7, pred,
                        "relation (7) at r=" + std::to_string(r));
        check_blockwise(mat_mul(m.y[r], m.tau[r - 1]), rhs8, pred,
                        "relation (8) at r=" + std::to_string(r));
      }

  // relation (9): tau_r^2 e(i) = Q_{i_r, i_{r+1}}(y_r, y_{r+1}) e(i)
  const Mat tausq_zero = zero_mat(dim);
  for (long r = 1; r < d; ++r) {
    const Mat lhs = mat_mul(m.tau[r - 1], m.tau[r - 1]);
    std::vector<std::pair<int, int>> pairs;
    for (size_t b = 0; b < dim; ++b) {
      const int i = letter(b, r), j = letter(b, r + 1);
      if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) ==
          pairs.end())
        pairs.emplace_back(i, j);
    }
    for (auto [i, j] : pairs) {
      if (i != j && !quiver.adjacent(i, j))
        rep.warnings.push_back("relation (9) at r=" + std::to_string(r) +
                               " evaluates Q on the non-adjacent pair (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "); the verbatim formula is used");
      const Mat rhs =
          detail::q_poly_eval(quiver, i, j, m.y[r - 1], m.y[r]);
      auto pred = [&, i, j](size_t b) {
        return letter(b, r) == i && letter(b, r + 1) == j;
      };
      check_blockwise(lhs, rhs, pred, "relation (9) at r=" + std::to_string(r));
    }
  }

  // relation (10): braid deviation.  The divided differences collapse to
  // exact expressions because the u-exponent of Q is 1 away from the odd
  // letter and 2 at it.
  for (long r = 1; r + 1 < d; ++r) {
    const Mat lhs = mat_sub(
        mat_mul(m.tau[r - 1], mat_mul(m.tau[r], m.tau[r - 1])),
        mat_mul(m.tau[r], mat_mul(m.tau[r - 1], m.tau[r])));
    std::vector<std::vector<int>> triples;
    for (size_t b = 0; b < dim; ++b) {
      std::vector<int> t{letter(b, r), letter(b, r + 1), letter(b, r + 2)};
      if (std::find(triples.begin(), triples.end(), t) == triples.end())
        triples.push_back(t);
    }
    const int n = datum.rank();
    for (auto& t : triples) {
      auto pred = [&](size_t b) {
        return letter(b, r) == t[0] && letter(b, r + 1) == t[1] &&
               letter(b, r + 2) == t[2];
      };
      Mat rhs = tausq_zero;
      if (t[0] == t[2] && t[0] != t[1]) {
        if (!quiver.adjacent(t[0], t[1]))
          rep.warnings.push_back(
              "relation (10) at r=" + std::to_string(r) +
              " evaluates Q on the non-adjacent pair (" + std::to_string(t[0]) +
              "," + std::to_string(t[1]) + "); the verbatim formula is used");
        const long sgn = quiver.d(t[0], t[1]) % 2 != 0 ? -1 : 1;
        if (t[0] != n) {
          rhs = zero_mat(dim);
          for (size_t k = 0; k < dim; ++k) rhs[k][k] = sgn;
        } else {
          rhs = mat_scale(sgn * (datum.parity(t[1]) != 0 ? -1 : 1),
                          mat_sub(m.y[r + 1], m.y[r - 1]));
        }
      }
      check_blockwise(lhs, rhs, pred,
                      "relation (10) at r=" + std::to_string(r));
    }
  }

  return rep;
}

// The cuspidal module of a reduced positive root: one-dimensional for an
// alpha root; for a beta root the two-dimensional module on v1 (degree 1,
// odd) and v-1 (degree -1, even) with y and tau supported at the two odd
// letters.
inline GradedSuperModule cuspidal_module(const RootDatum& datum,
                                         const Root& root) {
  GradedSuperModule m;
  m.nu = root.weight;
  const Word w = iota_plus(datum, root);
  const long d = m.nu.height();
  if (root.kind == Root::Kind::Alpha) {
    m.basis.push_back({"v", 0, 0, w});
    m.y.assign(d, zero_mat(1));
    m.tau.assign(d - 1, zero_mat(1));
    return m;
  }
  m.basis.push_back({"v1", 1, 1, w});
  m.basis.push_back({"v-1", -1, 0, w});
  m.y.assign(d, zero_mat(2));
  m.tau.assign(d - 1, zero_mat(2));
  const long pos = datum.rank() - root.i + 1;  // first of the two odd letters
  m.y[pos - 1][0][1] = 1;  // y_pos v-1 = v1
  m.y[pos][0][1] = 1;      // y_{pos+1} v-1 = v1
  m.tau[pos - 1][1][0] = 1;  // tau_pos v1 = v-1
  return m;
}

// ch^-_q: per block word, the signed graded dimension as a Laurent
// polynomial coefficient.
inline Element character(const GradedSuperModule& m) {
  Element ch;
  for (auto& b : m.basis)
    ch.add_term(b.block, RationalFunction(LaurentPoly::monomial(
                             b.parity != 0 ? -1 : 1, b.deg)));
  return ch;
}

// ch of an induced module M o N is ch(N) <> ch(M).
inline Element induced_character(const RootDatum& datum, const Element& ch_m,
                                 const Element& ch_n) {
  return shuffle(datum, ch_n, ch_m);
}

// Character of the standard module of a dominant word: the parity- and
// grading-shifted induction of cuspidal powers along the canonical
// factorization.  Must coincide with the dual PBW element.
inline Element standard_character(const RootDatum& datum, const Word& w) {
  detail::require_dominant(datum, w, "standard_character");
  const auto cf = canonical_factorize(w);
  Element ch(Word{});
  // i_1 > ... > i_d; the induction L_1^{o n_1} o ... o L_d^{o n_d} has
  // character ch(L_d)^{<> n_d} <> ... <> ch(L_1)^{<> n_1}
  for (auto& [l, mult] : cf.factors) {
    const Element cl = character(cuspidal_module(datum, iota_plus_inverse(datum, l)));
    for (long k = 0; k < mult; ++k) ch = shuffle(datum, cl, ch);
  }
  const auto [xi, s] = xi_and_s(datum, w);
  ch = RationalFunction(LaurentPoly::monomial(xi % 2 != 0 ? -1 : 1, s)) * ch;
  if (ch != dual_pbw(datum, w))
    throw std::domain_error(
        "standard_character: result differs from the dual PBW element at " +
        w.to_string());
  return ch;
}

inline Word highest_weight(const Element& ch) {
  auto [w, c] = max_word(ch);
  (void)c;
  return w;
}

}  // namespace qsh

#endif  // QSH_REPCHECK_HPP
