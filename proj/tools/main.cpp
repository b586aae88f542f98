#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "subshift/bratteli.hpp"
#include "subshift/contexts.hpp"
#include "subshift/error.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/serialize.hpp"
#include "subshift/spectra.hpp"
#include "subshift/zoo.hpp"
#include "verify.hpp"

using namespace subshift;
using nlohmann::json;

namespace {

struct Options {
  std::string shift;
  std::string file;
  std::size_t depth = 3;
  std::optional<std::size_t> ext_len;
  std::string tol = "1e-9";
  std::string format = "text";
  std::string out;
  std::string period;
  long offset = 0;
  std::size_t ray = 0;
  bool sync_only = false;
  std::size_t n = 0;
  std::string length;
  std::string word;
  std::optional<std::size_t> all_up_to;
  std::string kind;
  std::optional<std::size_t> family;
  std::string target;
  bool all = false;
};

struct Selected {
  std::string name;
  ShiftPresentation presentation;
  zoo::Facts facts;
};

Selected select(const Options& o) {
  if (!o.file.empty()) {
    if (!o.shift.empty()) {
      throw InvalidArgument("give either a shift name or --file, not both");
    }
    std::ifstream in(o.file);
    if (!in) {
      throw InvalidArgument("cannot read '" + o.file + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return {o.file, import_shift(buf.str()), {}};
  }
  if (o.shift.empty()) {
    throw InvalidArgument("no shift given; use a zoo name or --file");
  }
  auto e = zoo::get_shift(o.shift);
  return {e.name, e.presentation, e.facts};
}

Rational parse_rational(const std::string& text) {
  try {
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
      Rational m = parse_rational(text.substr(0, e));
      long x = std::stol(text.substr(e + 1));
      Rational scale = Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::abs(x))));
      return x < 0 ? Rational(m / scale) : Rational(m * scale);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(text.size() - dot - 1));
      return Rational(BigInt(digits.empty() ? "0" : digits), den);
    }
    return Rational(text);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse tolerance '" + text + "'");
  }
}

std::string decimal(const Rational& r, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << to_double(r);
  return os.str();
}

std::string cmd_language(const Options& o) {
  auto s = select(o);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(o.length, &used);
    if (used != o.length.size()) {
      throw std::invalid_argument(o.length);
    }
  } catch (const std::exception&) {
    throw InvalidArgument("language needs a word length, got '" + o.length + "'");
  }
  auto lang = enumerate_language(s.presentation, n);
  Alphabet const& a = s.presentation.alphabet();
  if (!lang.complete) {
    std::cerr << "warning: truncation did not stabilize; the list may be incomplete\n";
  }
  if (o.format == "json") {
    json words = json::array();
    for (auto const& w : lang.words) {
      words.push_back(a.format(w));
    }
    json j{{"shift", s.name}, {"n", n}, {"complete", lang.complete}, {"words", words}};
    return j.dump(2) + "\n";
  }
  std::string out;
  for (auto const& w : lang.words) {
    out += (w.empty() ? "(empty)" : a.format(w)) + "\n";
  }
  return out;
}

Classification classify_one(const ShiftPresentation& p, const ContextOracle& oracle, const Word& w) {
  Classification c;
  c.word = p.alphabet().format(w);
  SyncVerdict v = oracle.synchronizing(w);
  if (oracle.exact() || !v.synchronizing) {
    c.sync = v.synchronizing;
  } else {
    c.k = *oracle.bound();
  }
  return c;
}

std::string cmd_classify(const Options& o) {
  auto s = select(o);
  auto const& p = s.presentation;
  std::vector<Classification> results;
  if (o.all_up_to) {
    if (!o.word.empty()) {
      throw InvalidArgument("give a word or --all-up-to, not both");
    }
    for (std::size_t n = 1; n <= *o.all_up_to; ++n) {
      auto oracle = make_oracle(p, n, {o.ext_len, false});
      for (auto const& w : enumerate_language(p, n).words) {
        results.push_back(classify_one(p, *oracle, w));
      }
    }
  } else {
    if (o.word.empty()) {
      throw InvalidArgument("classify needs a word or --all-up-to");
    }
    Word w = p.alphabet().parse(o.word);
    auto oracle = make_oracle(p, w.size(), {o.ext_len, false});
    results.push_back(classify_one(p, *oracle, w));
  }
  std::string out;
  if (o.format == "json") {
    if (results.size() == 1 && !o.all_up_to) {
      return export_classification(results.front()) + "\n";
    }
    json arr = json::array();
    for (auto const& c : results) {
      arr.push_back(json::parse(export_classification(c)));
    }
    return arr.dump(2) + "\n";
  }
  for (auto const& c : results) {
    out += c.word + " sync=" +
           (c.sync ? (*c.sync ? "true" : "false") : "consistent-up-to-" + std::to_string(c.k)) + "\n";
  }
  return out;
}

BratteliDiagram build(const Options& o, const Selected& s) {
  DiagramKind kind = diagram_kind_from_string(o.kind);
  BuildOptions b{o.ext_len};
  BratteliDiagram d;
  if (kind == DiagramKind::Homoclinic) {
    d = build_blc(s.presentation, o.depth, b);
  } else {
    Word period;
    if (!o.period.empty()) {
      period = s.presentation.alphabet().parse(o.period);
    } else if (s.facts.default_period) {
      period = *s.facts.default_period;
    } else {
      throw InvalidArgument("heteroclinic diagrams need --period for this shift");
    }
    PeriodicPoint pt{period, o.offset};
    d = kind == DiagramKind::Stable ? build_blcs(s.presentation, pt, o.ray, o.depth, b)
                                    : build_blcu(s.presentation, pt, o.ray, o.depth, b);
  }
  return o.sync_only ? restrict_sync(d) : d;
}

std::string describe(const BratteliDiagram& d) {
  std::ostringstream os;
  Alphabet const& a = d.alphabet;
  os << "diagram " << to_string(d.kind) << (d.sync_restricted ? " (synchronizing part)" : "")
     << ", levels " << d.first_index << ".." << d.index_of_position(d.levels.size() - 1) << "\n";
  for (std::size_t pos = 0; pos < d.levels.size(); ++pos) {
    os << "V_" << d.index_of_position(pos) << " (" << d.levels[pos].size() << "):";
    for (auto const& v : d.levels[pos]) {
      if (d.has_root && pos == 0) {
        os << " root";
        continue;
      }
      os << " {";
      for (std::size_t i = 0; i < v.members.size(); ++i) {
        os << (i ? "," : "") << (v.members[i].empty() ? "e" : a.format(v.members[i]));
      }
      os << "}" << (v.sync ? "*" : "");
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < d.matrices.size(); ++i) {
    os << "A_" << d.index_of_position(i) << " =\n" << d.matrices[i].to_string() << "\n";
  }
  return os.str();
}

std::string cmd_bratteli(const Options& o) {
  auto s = select(o);
  auto d = build(o, s);
  if (o.format == "json") {
    return export_json(d);
  }
  if (o.format == "dot") {
    return export_dot(d);
  }
  return describe(d);
}

std::string cmd_ktheory(const Options& o) {
  auto s = select(o);
  auto d = build(o, s);
  auto k = k_summary(d);
  if (o.format == "json") {
    return export_ksummary(k);
  }
  std::ostringstream os;
  os << "rank sequence from level " << k.first_level << ":";
  for (auto r : k.rank_sequence) {
    os << " " << r;
  }
  os << "\neventual rank " << k.eventual_rank << " (reached at level " << k.eventual_level << ")\n";
  if (k.stationary) {
    os << "stationary matrix\n" << k.stationary->matrix.to_string() << "\n";
    if (k.stationary->determinant) {
      os << "determinant " << *k.stationary->determinant
         << (k.stationary->invertible ? " (invertible over Z)" : "") << "\n";
    }
  } else {
    os << "not stationary at depth " << o.depth << "\n";
  }
  os << "torsion: " << k.torsion_note << "\n";
  return os.str();
}

std::string cmd_spectra(const Options& o) {
  Rational const tol = parse_rational(o.tol);
  if (tol <= 0) {
    throw InvalidArgument("--tol must be positive");
  }
  if (o.family) {
    std::size_t const n = *o.family;
    auto e = perron_family(n, tol);
    auto power = perron_power(family_matrix(n), tol);
    if (o.format == "json") {
      json j{{"n", n},
             {"char_poly", char_poly_family(n).to_string()},
             {"lower", e.lower.str()},
             {"upper", e.upper.str()},
             {"power_lower", power.lower.str()},
             {"power_upper", power.upper.str()},
             {"power_converged", power.converged}};
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "A_" << n << " characteristic polynomial: " << char_poly_family(n).to_string() << "\n";
    os << "lambda_" << n << " in [" << decimal(e.lower) << ", " << decimal(e.upper) << "]\n";
    os << "power iteration: [" << decimal(power.lower) << ", " << decimal(power.upper) << "]"
       << (power.converged ? "" : " (not converged)") << "\n";
    return os.str();
  }
  auto s = select(o);
  std::size_t const n_max = o.n > 0 ? o.n : 10;
  auto r = entropy_report(s.presentation, n_max);
  bool const anbn = s.name == "anbn";
  if (o.format == "json") {
    json rows = json::array();
    for (auto const& row : r.rows) {
      rows.push_back({{"n", row.n}, {"count", row.count.str()}, {"normalized", row.normalized}});
    }
    json j{{"shift", s.name}, {"complete", r.complete}, {"note", r.note}, {"rows", rows}};
    if (anbn) {
      j["reference_log_sqrt2"] = std::log(std::sqrt(2.0));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n  |L_n|  (1/n) log |L_n|\n";
  for (auto const& row : r.rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", row.normalized);
    os << row.n << "  " << row.count << "  " << buf << "\n";
  }
  if (anbn) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", std::log(std::sqrt(2.0)));
    os << "log sqrt 2 = " << buf << " (for comparison only)\n";
  }
  os << r.note << (r.complete ? "" : "; truncation did not stabilize") << "\n";
  return os.str();
}

int cmd_verify(const Options& o, std::string& out) {
  std::vector<std::string> targets;
  if (o.all) {
    if (!o.target.empty()) {
      throw InvalidArgument("give a target or --all, not both");
    }
    targets = cli::verify_targets();
  } else if (!o.target.empty()) {
    targets.push_back(o.target);
  } else {
    throw InvalidArgument("verify needs a target or --all");
  }
  int status = 0;
  for (auto const& t : targets) {
    auto r = cli::run_verify(t);
    out += std::string(r.pass ? "PASS " : "FAIL ") + t + ": " + r.summary + "\n";
    if (!r.body.empty()) {
      out += r.body + "\n";
    }
    status = r.pass ? status : 1;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift spaces, synchronizing words, Bratteli diagrams and their K-theory"};
  app.require_subcommand(1);
  Options o;

  auto add_shift = [&](CLI::App* cmd) {
    cmd->add_option("shift,--shift", o.shift, "Zoo shift selector, e.g. even, full:3, minimal:fibonacci");
    cmd->add_option("--file", o.file, "subshift/v1 JSON shift definition");
  };
  auto add_output = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", o.out, "Write output to this file");
  };
  auto add_diagram = [&](CLI::App* cmd) {
    cmd->add_option("kind", o.kind, "lc, lcs or lcu");
    cmd->add_option("--depth", o.depth, "Number of levels below the root")->check(CLI::PositiveNumber);
    cmd->add_option("--ext-len", o.ext_len, "Bounded extension length for infinite presentations");
    cmd->add_option("--period", o.period, "Period word of the periodic point");
    cmd->add_option("--offset", o.offset, "Offset of the periodic point: p_i = period[(i + offset) mod |period|]");
    cmd->add_option("--ray", o.ray, "Ray offset N of B^lcs_N / B^lcu_N");
    cmd->add_flag("--sync", o.sync_only, "Restrict to synchronizing vertices");
  };

  auto* language = app.add_subcommand("language", "List L_n");
  add_shift(language);
  language->add_option("n", o.length, "Word length");
  add_output(language, {"text", "json"});

  auto* classify = app.add_subcommand("classify", "Decide whether words are synchronizing");
  add_shift(classify);
  classify->add_option("word", o.word, "Word to classify");
  classify->add_option("--all-up-to", o.all_up_to, "Classify every word of length 1..n");
  classify->add_option("--ext-len", o.ext_len, "Bounded extension length for infinite presentations");
  add_output(classify, {"text", "json"});

  auto* bratteli = app.add_subcommand("bratteli", "Build B^lc, B^lcs_N or B^lcu_N");
  add_shift(bratteli);
  add_diagram(bratteli);
  add_output(bratteli, {"text", "json", "dot"});

  auto* ktheory = app.add_subcommand("ktheory", "Summarize K_0 of a diagram");
  add_shift(ktheory);
  add_diagram(ktheory);
  add_output(ktheory, {"text", "json"});

  auto* spectra = app.add_subcommand("spectra", "Entropy data or the a^n b^n matrix family");
  add_shift(spectra);
  spectra->add_option("--family", o.family, "Level n of the a^n b^n matrix family")->check(CLI::PositiveNumber);
  spectra->add_option("--tol", o.tol, "Bracket width, e.g. 1e-9 or 1/1000");
  spectra->add_option("--depth", o.n, "Largest word length for entropy data (default 10)");
  add_output(spectra, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Check a named identity");
  verify->add_option("target", o.target, "Identity name")->check(CLI::IsMember(cli::verify_targets()));
  verify->add_flag("--all", o.all, "Check every identity");
  verify->add_option("--out", o.out, "Write output to this file");

  auto* exporter = app.add_subcommand("export", "Write a shift as a subshift/v1 document");
  add_shift(exporter);
  exporter->add_option("--out", o.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // With --file there is no shift positional, so the next one lands in `shift`.
  std::string* second = language->parsed()                             ? &o.length
                        : classify->parsed()                           ? &o.word
                        : bratteli->parsed() || ktheory->parsed()      ? &o.kind
                                                                       : nullptr;
  if (second && !o.file.empty() && !o.shift.empty() && second->empty()) {
    *second = std::move(o.shift);
    o.shift.clear();
  }

  std::string out;
  int status = 0;
  try {
    if (language->parsed()) {
      out = cmd_language(o);
    } else if (classify->parsed()) {
      out = cmd_classify(o);
    } else if (bratteli->parsed()) {
      out = cmd_bratteli(o);
    } else if (ktheory->parsed()) {
      out = cmd_ktheory(o);
    } else if (spectra->parsed()) {
      out = cmd_spectra(o);
    } else if (verify->parsed()) {
      status = cmd_verify(o, out);
    } else if (exporter->parsed()) {
      out = export_shift(select(o).presentation);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    file << out;
  }
  return status;
}
