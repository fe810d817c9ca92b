#ifndef QSH_SCALAR_HPP
#define QSH_SCALAR_HPP

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

// Exact scalars: Laurent polynomials over Z in one variable q, and their
// fraction field.  All arithmetic is exact; coefficients are arbitrary
// precision.

namespace qsh {

using Int = mpz_class;

// Sparse Laurent polynomial in q with integer coefficients.
// Invariant: no zero coefficients are stored; zero is the empty map.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long value) {
    if (value != 0) coeffs_[0] = value;
  }
  explicit LaurentPoly(const Int& value) {
    if (value != 0) coeffs_[0] = value;
  }

  static LaurentPoly monomial(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
  }
  static LaurentPoly q_power(long exp) { return monomial(1, exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  long min_exp() const { return coeffs_.begin()->first; }   // requires nonzero
  long max_exp() const { return coeffs_.rbegin()->first; }  // requires nonzero

  Int coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  const std::map<long, Int>& terms() const { return coeffs_; }

  void add_term(long exp, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.coeffs_)
      for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiplication by q^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
  }

  // The super bar-involution q -> -q^{-1}.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[-e] = (e % 2 == 0) ? c : -c;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  std::map<long, Int> coeffs_;
};

namespace detail {

// Dense integer polynomial helpers (coefficient vectors, constant term
// first, no trailing zeros) used for gcd-based normalization.

inline void dense_trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int dense_content(const std::vector<Int>& p) {
  Int g = 0;
  for (auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void dense_divexact(std::vector<Int>& p, const Int& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
inline std::vector<Int> dense_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const long da = static_cast<long>(a.size()) - 1;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (long k = 0; k <= db; ++k) a[da - db + k] -= la * b[k];
    dense_trim(a);
  }
  return a;
}

// gcd in Z[x] via contents and a primitive remainder sequence.
inline std::vector<Int> dense_gcd(std::vector<Int> a, std::vector<Int> b) {
  dense_trim(a);
  dense_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  Int ca = dense_content(a), cb = dense_content(b);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  dense_divexact(a, ca);
  dense_divexact(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Int> r = dense_prem(a, b);
    if (!r.empty()) {
      Int cr = dense_content(r);
      dense_divexact(r, cr);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  for (auto& c : a) c *= cg;
  return a;
}

// Exact division a / b in Z[x]; nullopt if not exact.
inline std::optional<std::vector<Int>> dense_divide(std::vector<Int> a,
                                                    const std::vector<Int>& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  std::vector<Int> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  const long db = static_cast<long>(b.size()) - 1;
  while (!a.empty()) {
    const long da = static_cast<long>(a.size()) - 1;
    if (da < db) return std::nullopt;
    Int qc = a.back() / b.back();
    if (qc * b.back() != a.back()) return std::nullopt;
    quo[da - db] = qc;
    for (long k = 0; k <= db; ++k) a[da - db + k] -= qc * b[k];
    dense_trim(a);
  }
  return quo;
}

inline std::vector<Int> to_dense(const LaurentPoly& p, long* shift) {
  // p = q^shift * (dense polynomial with nonzero constant term)
  *shift = p.is_zero() ? 0 : p.min_exp();
  std::vector<Int> d;
  if (p.is_zero()) return d;
  d.assign(static_cast<size_t>(p.max_exp() - p.min_exp() + 1), Int(0));
  for (auto& [e, c] : p.terms()) d[static_cast<size_t>(e - *shift)] = c;
  return d;
}

inline LaurentPoly from_dense(const std::vector<Int>& d, long shift) {
  LaurentPoly p;
  for (size_t k = 0; k < d.size(); ++k)
    p.add_term(shift + static_cast<long>(k), d[k]);
  return p;
}

}  // namespace detail

// Exact division in Z[q, q^-1]; nullopt when b does not divide a.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a,
                                               const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return LaurentPoly();
  long sa, sb;
  auto da = detail::to_dense(a, &sa);
  auto db = detail::to_dense(b, &sb);
  auto quo = detail::dense_divide(std::move(da), db);
  if (!quo) return std::nullopt;
  return detail::from_dense(*quo, sa - sb);
}

// Element of the fraction field of Z[q,q^-1], kept in normal form:
// gcd(num, den) = 1 as one-variable polynomials, the denominator has lowest
// exponent 0 and positive leading coefficient.  Equality is syntactic.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long v) : num_(v), den_(1) {}
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  // Lossless conversion down to a Laurent polynomial; requires is_laurent().
  const LaurentPoly& as_laurent() const {
    if (!is_laurent())
      throw std::domain_error("not a Laurent polynomial: " + to_string());
    return num_;
  }

  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // q -> -q^{-1} applied to numerator and denominator, then renormalized.
  RationalFunction bar() const {
    return RationalFunction(num_.bar(), den_.bar());
  }

  std::string to_string() const;

private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    long sn, sd;
    auto dn = detail::to_dense(num_, &sn);
    auto dd = detail::to_dense(den_, &sd);
    auto g = detail::dense_gcd(dn, dd);
    if (!(g.size() == 1 && g[0] == 1)) {
      dn = *detail::dense_divide(std::move(dn), g);
      dd = *detail::dense_divide(std::move(dd), g);
    }
    if (dd.back() < 0) {
      for (auto& c : dn) c = -c;
      for (auto& c : dd) c = -c;
    }
    num_ = detail::from_dense(dn, sn - sd);
    den_ = detail::from_dense(dd, 0);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RationalFunction bar(const RationalFunction& p) { return p.bar(); }

// Super quantum integer [m]_i with q_i = q^s, per the parity of i.
// Even parity: (q_i^m - q_i^-m)/(q_i - q_i^-1); odd parity:
// ((-q_i)^m - q_i^-m)/(-q_i - q_i^-1).  Expanded in closed form.
inline LaurentPoly super_qint(long m, int parity, long s) {
  if (m < 0) throw std::domain_error("super_qint: negative m");
  LaurentPoly p;
  for (long k = 0; k < m; ++k) {
    long sign = 1;
    if (parity % 2 != 0 && (m - 1 - k) % 2 != 0) sign = -1;
    p.add_term(s * (m - 1 - 2 * k), sign);
  }
  return p;
}

inline LaurentPoly super_qfact(long m, int parity, long s) {
  LaurentPoly p(1);
  for (long k = 1; k <= m; ++k) p *= super_qint(k, parity, s);
  return p;
}

// --- canonical text form -------------------------------------------------
//
// Sum of c*q^k terms, written from the highest exponent down, matching the
// conventional way these values appear in print: "q^2 - 1 + q^-2",
// "-q + q^-1".  Exponent 1 prints as "q", exponent 0 as a bare integer.

inline std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else if (c < 0) {
      out << " - ";
      c = -c;
    } else {
      out << " + ";
    }
    const long e = it->first;
    if (e == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      if (e == 1)
        out << "q";
      else
        out << "q^" << e;
    }
  }
  return out.str();
}

inline std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qsh

#endif  // QSH_SCALAR_HPP
