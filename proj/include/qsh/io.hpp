#ifndef QSH_IO_HPP
#define QSH_IO_HPP

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qsh/cartan.hpp"
#include "qsh/repcheck.hpp"
#include "qsh/scalar.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/words.hpp"

// Parsing of the text notations (words, roots, scalars) and the JSON
// schemas for elements and modules.

namespace qsh {

using json = nlohmann::json;

inline std::invalid_argument bad_token(const std::string& what,
                                       const std::string& token) {
  return std::invalid_argument(what + ": '" + token + "'");
}

// Word text form "(i1,i2,...)"; whitespace-insensitive.
inline Word parse_word(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw bad_token("malformed word", text);
  std::vector<int> letters;
  const std::string body = s.substr(1, s.size() - 2);
  size_t k = 0;
  while (k <= body.size() && !body.empty()) {
    size_t e = body.find(',', k);
    if (e == std::string::npos) e = body.size();
    const std::string tok = body.substr(k, e - k);
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0')
      throw bad_token("malformed letter", tok);
    letters.push_back(static_cast<int>(v));
    k = e + 1;
  }
  return Word(std::move(letters));
}

// Root text form "alpha(i,j)" or "beta(i,j)".
inline Root parse_root(const RootDatum& datum, const std::string& text) {
  const size_t par = text.find('(');
  if (par == std::string::npos) throw bad_token("malformed root", text);
  const std::string kind = text.substr(0, par);
  const Word ij = parse_word(text.substr(par));
  if (ij.length() != 2) throw bad_token("malformed root", text);
  if (kind == "alpha") return make_alpha(datum, ij.letters[0], ij.letters[1]);
  if (kind == "beta") return make_beta(datum, ij.letters[0], ij.letters[1]);
  throw bad_token("unknown root kind", kind);
}

// Weight as a comma-separated coefficient list, e.g. "1,2" or "[1,2]".
inline Weight parse_weight(const RootDatum& datum, const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[' && s.back() == ']')
    s = s.substr(1, s.size() - 2);
  const Word w = parse_word("(" + s + ")");
  if (static_cast<int>(w.length()) != datum.rank())
    throw bad_token("weight rank mismatch", text);
  Weight nu = Weight::zero(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) {
    if (w.letters[i] < 0) throw bad_token("negative weight coefficient", text);
    nu.c[i] = w.letters[i];
  }
  return nu;
}

namespace detail {

// One summand of the canonical Laurent text: [-][int][*]["q"["^" int]].
inline void parse_laurent_term(const std::string& tok, LaurentPoly* out) {
  Int coeff(1);
  long exp = 0;
  size_t k = 0;
  bool negative = false;
  if (k < tok.size() && tok[k] == '-') {
    negative = true;
    ++k;
  }
  bool saw_digits = false;
  if (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) {
    size_t e = k;
    while (e < tok.size() && std::isdigit(static_cast<unsigned char>(tok[e])))
      ++e;
    coeff = Int(tok.substr(k, e - k));
    saw_digits = true;
    k = e;
    if (k < tok.size() && tok[k] == '*') ++k;
  }
  if (k < tok.size()) {
    if (tok[k] != 'q') throw bad_token("malformed term", tok);
    ++k;
    exp = 1;
    if (k < tok.size()) {
      if (tok[k] != '^') throw bad_token("malformed term", tok);
      char* end = nullptr;
      exp = std::strtol(tok.c_str() + k + 1, &end, 10);
      if (end == tok.c_str() + k + 1 || end != tok.c_str() + tok.size())
        throw bad_token("malformed term", tok);
      k = tok.size();
    }
  } else if (!saw_digits) {
    throw bad_token("malformed term", tok);
  }
  if (negative) coeff = -coeff;
  out->add_term(exp, coeff);
}

}  // namespace detail

// Inverse of LaurentPoly::to_string.
inline LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return LaurentPoly();
  LaurentPoly p;
  size_t k = 0;
  bool negate = false;
  if (!s.empty() && s[0] == '-') {
    negate = true;
    k = 1;
  }
  while (k < s.size()) {
    size_t e = k;
    while (e < s.size() && s[e] != '+' &&
           !(s[e] == '-' && e > k && s[e - 1] != '^'))
      ++e;
    std::string tok = s.substr(k, e - k);
    if (negate) tok = "-" + tok;
    LaurentPoly term;
    detail::parse_laurent_term(tok, &term);
    p += term;
    if (e < s.size()) {
      negate = s[e] == '-';
      k = e + 1;
    } else {
      k = e;
    }
  }
  return p;
}

// Inverse of RationalFunction::to_string.
inline RationalFunction parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const size_t mid = s.find(")/(");
  if (!s.empty() && s.front() == '(' && s.back() == ')' &&
      mid != std::string::npos)
    return RationalFunction(parse_laurent(s.substr(1, mid - 1)),
                            parse_laurent(s.substr(mid + 3, s.size() - mid - 4)));
  return RationalFunction(parse_laurent(s));
}

inline json word_to_json(const Word& w) {
  json a = json::array();
  for (int l : w.letters) a.push_back(l);
  return a;
}

inline Word word_from_json(const json& a) {
  if (!a.is_array()) throw bad_token("malformed word json", a.dump());
  std::vector<int> letters;
  for (auto& v : a) letters.push_back(v.get<int>());
  return Word(std::move(letters));
}

inline json weight_to_json(const Weight& nu) {
  json a = json::array();
  for (long c : nu.c) a.push_back(c);
  return a;
}

inline Weight weight_from_json(const json& a) {
  std::vector<long> c;
  for (auto& v : a) c.push_back(v.get<long>());
  return Weight(std::move(c));
}

// Element schema: {"weight": [...], "terms": [{"word": [...], "coeff": "..."}]}
// with terms in decreasing lexicographic word order.
inline json element_to_json(const RootDatum& datum, const Element& x) {
  json j;
  const auto nu = homogeneous_weight(datum, x);
  if (!nu) throw std::domain_error("element is not homogeneous");
  j["weight"] = weight_to_json(*nu);
  json terms = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back(
        {{"word", word_to_json(it->first)}, {"coeff", it->second.to_string()}});
  j["terms"] = std::move(terms);
  return j;
}

inline Element element_from_json(const json& j) {
  Element x;
  for (auto& t : j.at("terms"))
    x.add_term(word_from_json(t.at("word")),
               parse_scalar(t.at("coeff").get<std::string>()));
  return x;
}

inline std::string mpq_to_string(const mpq_class& v) { return v.get_str(); }

inline mpq_class mpq_from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw bad_token("malformed rational", s);
  v.canonicalize();
  return v;
}

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& v : row) r.push_back(mpq_to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Mat mat_from_json(const json& j) {
  Mat m;
  for (auto& row : j) {
    std::vector<mpq_class> r;
    for (auto& v : row) r.push_back(mpq_from_string(v.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

// Module schema: {"n":..., "nu":[...], "basis":[{"label","deg","parity",
// "block"}], "y":[...], "tau":[...]}.
inline json module_to_json(const RootDatum& datum,
                           const GradedSuperModule& m) {
  json j;
  j["n"] = datum.rank();
  j["nu"] = weight_to_json(m.nu);
  json basis = json::array();
  for (auto& b : m.basis)
    basis.push_back({{"label", b.label},
                     {"deg", b.deg},
                     {"parity", b.parity},
                     {"block", word_to_json(b.block)}});
  j["basis"] = std::move(basis);
  json ys = json::array(), taus = json::array();
  for (auto& y : m.y) ys.push_back(mat_to_json(y));
  for (auto& t : m.tau) taus.push_back(mat_to_json(t));
  j["y"] = std::move(ys);
  j["tau"] = std::move(taus);
  return j;
}

inline GradedSuperModule module_from_json(const json& j, int* rank_out = nullptr) {
  GradedSuperModule m;
  if (rank_out) *rank_out = j.at("n").get<int>();
  m.nu = weight_from_json(j.at("nu"));
  for (auto& b : j.at("basis"))
    m.basis.push_back({b.at("label").get<std::string>(), b.at("deg").get<long>(),
                       b.at("parity").get<int>(), word_from_json(b.at("block"))});
  for (auto& y : j.at("y")) m.y.push_back(mat_from_json(y));
  for (auto& t : j.at("tau")) m.tau.push_back(mat_from_json(t));
  return m;
}

}  // namespace qsh

#endif  // QSH_IO_HPP
