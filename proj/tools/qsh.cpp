// Command-line interface: batch access to the root data, word
// combinatorics, shuffle products, bilinear form, bases, cuspidal modules,
// and the self-test suite.  Exit codes: 0 success, 1 mathematical failure,
// 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsh/bases.hpp"
#include "qsh/cartan.hpp"
#include "qsh/io.hpp"
#include "qsh/repcheck.hpp"
#include "qsh/scalar.hpp"
#include "qsh/selftest.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/words.hpp"

namespace {

using namespace qsh;

struct Config {
  int n = 2;
  long max_height = 6;
  std::string format = "text";
  std::string orientation = "up";
  std::string output;
};

std::ostream* open_output(const Config& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return &std::cout;
  file.open(cfg.output);
  if (!file) throw std::invalid_argument("cannot open output file: '" + cfg.output + "'");
  return &file;
}

bool json_mode(const Config& cfg) {
  if (cfg.format == "json") return true;
  if (cfg.format == "text") return false;
  throw std::invalid_argument("unknown format: '" + cfg.format + "'");
}

QuiverData::Orientation orientation(const Config& cfg) {
  if (cfg.orientation == "up") return QuiverData::Orientation::Up;
  if (cfg.orientation == "down") return QuiverData::Orientation::Down;
  throw std::invalid_argument("unknown quiver orientation: '" + cfg.orientation + "'");
}

void check_height(const Config& cfg, const Weight& nu) {
  if (nu.height() > cfg.max_height)
    throw std::invalid_argument(
        "weight height exceeds --max-height: '" + std::to_string(nu.height()) + "'");
}

// Cache directory for per-weight Gram matrices: QSH_CACHE_DIR overrides the
// default of no on-disk caching.
std::string cache_dir() {
  const char* env = std::getenv("QSH_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::string weight_text(const Weight& nu) {
  std::string s = "[";
  for (size_t k = 0; k < nu.c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(nu.c[k]);
  }
  return s + "]";
}

// Element rendering for text output: terms in increasing word order, the
// coefficient omitted when 1 and parenthesized when it is a sum.
std::string element_text(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [w, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    if (c == RationalFunction(1)) {
      out << w.to_string();
      continue;
    }
    const std::string s = c.to_string();
    const bool simple = c.is_laurent() && c.as_laurent().terms().size() == 1;
    if (simple)
      out << s << " " << w.to_string();
    else
      out << "(" << s << ") " << w.to_string();
  }
  return out.str();
}

json root_json(const Root& r) {
  return {{"kind", r.kind == Root::Kind::Alpha ? "alpha" : "beta"},
          {"i", r.i},
          {"j", r.j},
          {"weight", weight_to_json(r.weight)}};
}

int cmd_roots(const Config& cfg, std::ostream& out) {
  RootDatum d(cfg.n);
  const auto reduced = reduced_positive_roots(d);
  const auto full = full_positive_roots(d);
  if (json_mode(cfg)) {
    json j;
    j["n"] = cfg.n;
    j["reduced"] = json::array();
    for (auto& r : reduced) j["reduced"].push_back(root_json(r));
    auto weights = [](const std::vector<Weight>& ws) {
      json a = json::array();
      for (auto& w : ws) a.push_back(weight_to_json(w));
      return a;
    };
    j["full"] = weights(full.full);
    j["full_even"] = weights(full.full_even);
    j["full_odd"] = weights(full.full_odd);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "reduced positive roots (" << reduced.size() << "):\n";
  for (auto& r : reduced)
    out << "  " << r.to_string() << "  weight " << weight_text(r.weight)
        << "  " << (d.parity(r.weight) ? "odd" : "even") << "  word "
        << iota_plus(d, r).to_string() << "\n";
  out << "full positive system (" << full.full.size() << "):\n";
  for (auto& w : full.full)
    out << "  " << weight_text(w) << "  " << (d.parity(w) ? "odd" : "even")
        << "\n";
  return 0;
}

int cmd_lyndon(const Config& cfg, std::ostream& out) {
  RootDatum d(cfg.n);
  const auto roots = reduced_positive_roots(d);
  if (json_mode(cfg)) {
    json a = json::array();
    for (auto& r : roots)
      a.push_back({{"root", root_json(r)},
                   {"word", word_to_json(iota_plus(d, r))}});
    out << a.dump(2) << "\n";
    return 0;
  }
  for (auto& r : roots)
    out << iota_plus(d, r).to_string() << "  <->  " << r.to_string() << "\n";
  return 0;
}

int cmd_dominant(const Config& cfg, const std::string& weight_arg,
                 std::ostream& out) {
  RootDatum d(cfg.n);
  const Weight nu = parse_weight(d, weight_arg);
  check_height(cfg, nu);
  const auto words = dominant_words(d, nu);
  if (json_mode(cfg)) {
    json a = json::array();
    for (auto& w : words) a.push_back(word_to_json(w));
    out << a.dump(2) << "\n";
    return 0;
  }
  for (auto& w : words) out << w.to_string() << "\n";
  return 0;
}

int cmd_shuffle(const Config& cfg, const std::string& w1,
                const std::string& w2, std::ostream& out) {
  RootDatum d(cfg.n);
  const Word a = parse_word(w1), b = parse_word(w2);
  const Element r = shuffle_words(d, a, b);
  if (json_mode(cfg)) {
    out << element_to_json(d, r).dump(2) << "\n";
    return 0;
  }
  out << element_text(r) << "\n";
  return 0;
}

int cmd_gram(const Config& cfg, const std::string& weight_arg,
             std::ostream& out) {
  RootDatum d(cfg.n);
  const Weight nu = parse_weight(d, weight_arg);
  check_height(cfg, nu);
  const std::string dir = cache_dir();
  std::string key;
  if (!dir.empty()) {
    key = dir + "/gram-n" + std::to_string(cfg.n);
    for (long c : nu.c) key += "-" + std::to_string(c);
    key += ".json";
    if (json_mode(cfg)) {
      std::ifstream cached(key);
      if (cached) {
        out << cached.rdbuf();
        return 0;
      }
    }
  }
  FormCache cache(d);
  const auto words = cache.words(nu);
  const auto g = cache.gram_matrix(nu);
  json j;
  j["words"] = json::array();
  for (auto& w : words) j["words"].push_back(word_to_json(w));
  j["gram"] = json::array();
  for (auto& row : g) {
    json r = json::array();
    for (auto& v : row) r.push_back(v.to_string());
    j["gram"].push_back(std::move(r));
  }
  if (!key.empty()) {
    std::ofstream f(key);
    if (f) f << j.dump(2) << "\n";
  }
  if (json_mode(cfg)) {
    out << j.dump(2) << "\n";
    return 0;
  }
  for (size_t r = 0; r < g.size(); ++r) {
    out << words[r].to_string() << ":";
    for (auto& v : g[r]) out << "  " << v.to_string();
    out << "\n";
  }
  return 0;
}

int cmd_basis(const Config& cfg, const std::string& weight_arg,
              const std::string& which, std::ostream& out) {
  RootDatum d(cfg.n);
  const Weight nu = parse_weight(d, weight_arg);
  check_height(cfg, nu);
  std::vector<std::pair<Word, Element>> rows;
  if (which == "dual-canonical") {
    auto dc = dual_canonical(d, nu);
    for (auto it = dc.basis.rbegin(); it != dc.basis.rend(); ++it)
      rows.emplace_back(it->first, it->second);
  } else {
    FormCache cache(d);
    for (const Word& w : dominant_words(d, nu))
      rows.emplace_back(w, which == "pbw" ? pbw(d, w)
                                          : dual_pbw_checked(cache, w));
  }
  if (json_mode(cfg)) {
    json a = json::array();
    for (auto& [w, e] : rows)
      a.push_back({{"word", word_to_json(w)},
                   {"element", element_to_json(d, e)},
                   {"kappa", kappa(d, w).to_string()},
                   {"varsigma", varsigma(d, w).to_string()}});
    out << a.dump(2) << "\n";
    return 0;
  }
  for (auto& [w, e] : rows)
    out << w.to_string() << ":  " << element_text(e) << "\n";
  return 0;
}

int cmd_kappa(const Config& cfg, const std::string& word_arg,
              std::ostream& out) {
  RootDatum d(cfg.n);
  const Word w = parse_word(word_arg);
  const LaurentPoly k = kappa(d, w);
  if (json_mode(cfg)) {
    out << json{{"word", word_to_json(w)}, {"kappa", k.to_string()}}.dump(2)
        << "\n";
    return 0;
  }
  out << k.to_string() << "\n";
  return 0;
}

int cmd_cuspidal(const Config& cfg, const std::string& root_arg,
                 std::ostream& out) {
  RootDatum d(cfg.n);
  const Root root = parse_root(d, root_arg);
  const GradedSuperModule m = cuspidal_module(d, root);
  if (json_mode(cfg)) {
    json j = module_to_json(d, m);
    j["character"] = element_to_json(d, character(m));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "cuspidal module of " << root.to_string() << ", dimension "
      << m.dim() << "\n";
  for (auto& b : m.basis)
    out << "  " << b.label << "  deg " << b.deg << "  parity " << b.parity
        << "  block " << b.block.to_string() << "\n";
  out << "character: " << element_text(character(m)) << "\n";
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open module file: '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed module file: '" + path + "'");
  }
  int n = cfg.n;
  const GradedSuperModule m = module_from_json(j, &n);
  RootDatum d(n);
  const VerifyReport rep = verify_relations(m, QuiverData(d, orientation(cfg)));
  if (json_mode(cfg)) {
    out << json{{"ok", rep.ok()},
                {"violations", rep.violations},
                {"warnings", rep.warnings}}
               .dump(2)
        << "\n";
  } else {
    out << rep.to_string() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_standard_char(const Config& cfg, const std::string& word_arg,
                      std::ostream& out) {
  RootDatum d(cfg.n);
  const Word w = parse_word(word_arg);
  const Element ch = standard_character(d, w);
  if (json_mode(cfg)) {
    out << element_to_json(d, ch).dump(2) << "\n";
    return 0;
  }
  out << element_text(ch) << "\n";
  return 0;
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
  const auto results = selftest::run_all();
  bool ok = true;
  if (json_mode(cfg)) {
    json a = json::array();
    for (auto& r : results) {
      a.push_back({{"index", r.index},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"failures", r.failures}});
      ok = ok && r.pass;
    }
    out << a.dump(2) << "\n";
  } else {
    for (auto& r : results) {
      out << r.line() << "\n";
      for (auto& f : r.failures) out << "    " << f << "\n";
      ok = ok && r.pass;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"quantum shuffle superalgebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-n,--rank", cfg.n, "rank of the root datum")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-height", cfg.max_height, "cap on weight heights")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format: text or json");
  app.add_option("--quiver-orientation", cfg.orientation,
                 "arrow orientation: up or down");
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");

  std::string weight_arg, w1, w2, word_arg, root_arg, path;
  auto* roots = app.add_subcommand("roots", "positive root tables");
  auto* lyndon = app.add_subcommand("lyndon", "dominant Lyndon words");
  auto* dominant = app.add_subcommand("dominant", "dominant words of a weight");
  dominant->add_option("--weight", weight_arg, "weight coefficients c1,...,cn")
      ->required();
  auto* shuf = app.add_subcommand("shuffle", "quantum shuffle of two words");
  shuf->add_option("w1", w1, "first word, e.g. \"(2)\"")->required();
  shuf->add_option("w2", w2, "second word")->required();
  auto* gram = app.add_subcommand("gram", "Gram matrix of a weight space");
  gram->add_option("--weight", weight_arg)->required();
  auto* pbw_cmd = app.add_subcommand("pbw", "PBW basis of a weight");
  pbw_cmd->add_option("--weight", weight_arg)->required();
  auto* dpbw = app.add_subcommand("dual-pbw", "dual PBW basis of a weight");
  dpbw->add_option("--weight", weight_arg)->required();
  auto* dcan =
      app.add_subcommand("dual-canonical", "dual canonical basis of a weight");
  dcan->add_option("--weight", weight_arg)->required();
  auto* kap = app.add_subcommand("kappa", "leading coefficient of b*");
  kap->add_option("word", word_arg)->required();
  auto* cusp = app.add_subcommand("cuspidal", "cuspidal module of a root");
  cusp->add_option("root", root_arg, "e.g. \"beta(1,2)\"")->required();
  auto* verify = app.add_subcommand("verify", "verify a module file");
  verify->add_option("file", path, "module JSON file")->required();
  auto* stdchar =
      app.add_subcommand("standard-char", "standard module character");
  stdchar->add_option("word", word_arg)->required();
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::ofstream file;
    std::ostream& out = *open_output(cfg, file);
    if (roots->parsed()) return cmd_roots(cfg, out);
    if (lyndon->parsed()) return cmd_lyndon(cfg, out);
    if (dominant->parsed()) return cmd_dominant(cfg, weight_arg, out);
    if (shuf->parsed()) return cmd_shuffle(cfg, w1, w2, out);
    if (gram->parsed()) return cmd_gram(cfg, weight_arg, out);
    if (pbw_cmd->parsed()) return cmd_basis(cfg, weight_arg, "pbw", out);
    if (dpbw->parsed()) return cmd_basis(cfg, weight_arg, "dual-pbw", out);
    if (dcan->parsed()) return cmd_basis(cfg, weight_arg, "dual-canonical", out);
    if (kap->parsed()) return cmd_kappa(cfg, word_arg, out);
    if (cusp->parsed()) return cmd_cuspidal(cfg, root_arg, out);
    if (verify->parsed()) return cmd_verify(cfg, path, out);
    if (stdchar->parsed()) return cmd_standard_char(cfg, word_arg, out);
    if (self->parsed()) return cmd_selftest(cfg, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
