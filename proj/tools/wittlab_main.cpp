// wittlab -- exact local invariants of quadratic forms, Z_p-isometry
// certificates, Clifford/spin checks and the full support pipeline.
//
// Exit codes: 0 verified/true, 1 falsified claim, 2 usage error, 3 internal.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wittlab/clifford.hpp"
#include "wittlab/repro.hpp"

using namespace wittlab;
using repro::Json;

namespace {

constexpr const char* kUsage = R"(usage: wittlab <command> [args]

commands:
  hilbert <a> <b> --place <real|p>        Hilbert symbol (a, b) at a place
  hasse <form> --place <real|p>           Hasse invariant of a diagonal form
  witt <form> --place <real|p>            Witt index (and kernel with --json)
  isotropy <form> (--place <real|p> | --global)
  isometry-zp <form> --p <prime>          certify <1,1,1,P> ~ <-1,-1,-1,-P> over Z_p
  clifford --form <form> <elem> [<elem> ...]   product of Clifford elements
  spin-check --form <form> <elem> [--integral] [--invert p1,p2,...]
  csp --form <form> --places <real,p1,...>
  support --form <form> --places <real,p1,...> [--assume-small-residue-ok]
  primes --count <k> [--min <n>]          primes congruent to 17 mod 24
  repro --k <k> [--primes p1,...] [--bound B]   full verification pipeline

common flags: --json, --precision <N> (default 64, env WITTLAB_PRECISION)

forms are written "<a1,a2,...,an>" with integer or num/den entries;
Clifford elements like "1/2 + 3*e1*e2 - e3".
)";

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  std::set<std::string> flags;

  bool has_flag(const std::string& name) const { return flags.count(name) > 0; }
  std::string option_or(const std::string& name, const std::string& fallback) const {
    auto it = options.find(name);
    return it == options.end() ? fallback : it->second;
  }
  std::string require_option(const std::string& name) const {
    auto it = options.find(name);
    if (it == options.end()) throw ValidationError("missing required option --" + name);
    return it->second;
  }
};

const std::set<std::string> kValueOptions = {"place", "p",      "precision", "bound",
                                             "count", "min",    "primes",    "places",
                                             "form",  "k",      "radicand",  "invert"};
const std::set<std::string> kBoolFlags = {"json", "global", "assume-small-residue-ok",
                                          "integral", "help"};

Args parse_args(int argc, char** argv, int start) {
  Args a;
  for (int i = start; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok.rfind("--", 0) == 0) {
      std::string name = tok.substr(2);
      std::string value;
      auto eq = name.find('=');
      bool has_inline = eq != std::string::npos;
      if (has_inline) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
      }
      if (kValueOptions.count(name)) {
        if (!has_inline) {
          if (i + 1 >= argc) throw ValidationError("option --" + name + " needs a value");
          value = argv[++i];
        }
        a.options[name] = value;
      } else if (kBoolFlags.count(name)) {
        a.flags.insert(name);
      } else {
        throw ValidationError("unknown option --" + name);
      }
    } else {
      a.positional.push_back(tok);
    }
  }
  return a;
}

int read_precision(const Args& a) {
  std::string text = a.option_or("precision", "");
  if (text.empty()) {
    const char* env = std::getenv("WITTLAB_PRECISION");
    if (env != nullptr) text = env;
  }
  if (text.empty()) return kDefaultPrecision;
  try {
    int n = std::stoi(text);
    if (n < 1) throw ValidationError("precision must be >= 1");
    return n;
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse precision '" + text + "'");
  }
}

Rat parse_rational_arg(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text, 10));
    Rat r(Int(text.substr(0, slash), 10), Int(text.substr(slash + 1), 10));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse rational '" + text + "'");
  }
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  size_t i = 0;
  while (i < text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string piece = text.substr(i, j - i);
    if (!piece.empty()) {
      try {
        out.emplace_back(piece, 10);
      } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse integer '" + piece + "'");
      }
    }
    i = j + 1;
  }
  return out;
}

std::vector<Place> parse_place_list(const std::string& text) {
  std::vector<Place> out;
  size_t i = 0;
  while (i < text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string piece = text.substr(i, j - i);
    if (!piece.empty()) out.push_back(Place::parse(piece));
    i = j + 1;
  }
  return out;
}

void emit(const Json& j, bool json_mode, const std::string& text) {
  if (json_mode) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

// ---- Clifford element literals: "1/2 + 3*e1*e2 - e4" ----------------------

// Terms are '*'-separated factors: a rational, the adjoined root 's'
// (needs --radicand), or a generator e<k>.
clifford::CliffordElem parse_element(const clifford::AlgebraPtr& alg, const std::string& text) {
  using clifford::CliffordElem;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_term = [&]() -> CliffordElem {
    CliffordElem word = CliffordElem::scalar(alg, QuadRat(1));
    bool saw_factor = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '/')) {
          ++i;
        }
        word = word.scale(QuadRat(parse_rational_arg(text.substr(start, i - start))));
      } else if (i < text.size() && text[i] == 's') {
        ++i;
        if (alg->radicand() == 0) {
          throw ValidationError("'s' needs --radicand to fix the adjoined square root");
        }
        word = word.scale(QuadRat(Rat(0), Rat(1), alg->radicand()));
      } else if (i < text.size() && text[i] == 'e') {
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ValidationError("expected a generator index after 'e'");
        int index = std::stoi(text.substr(start, i - start));
        word = clifford::clifford_mul(word, CliffordElem::generator(alg, index));
      } else {
        throw ValidationError("expected a factor in element literal '" + text + "'");
      }
      saw_factor = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) throw ValidationError("empty term in element literal '" + text + "'");
    return word;
  };

  skip();
  bool negate = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negate = text[i] == '-';
    ++i;
  }
  CliffordElem acc = parse_term();
  if (negate) acc = -acc;
  skip();
  while (i < text.size()) {
    char op = text[i];
    if (op != '+' && op != '-') {
      throw ValidationError(std::string("unexpected character '") + op + "' in element literal");
    }
    ++i;
    CliffordElem term = parse_term();
    acc = op == '-' ? acc - term : acc + term;
    skip();
  }
  return acc;
}

Json element_json(const clifford::CliffordElem& e) {
  // Records of (subset bitmask, num, den, radical num, radical den).
  Json records = Json::array();
  for (const auto& [mask, c] : e.coefficients()) {
    Json rec = Json::array();
    rec.push_back(mask);
    rec.push_back(c.rational().get_num().get_str());
    rec.push_back(c.rational().get_den().get_str());
    rec.push_back(c.radical_coeff().get_num().get_str());
    rec.push_back(c.radical_coeff().get_den().get_str());
    records.push_back(rec);
  }
  Json j;
  j["radicand"] = e.algebra()->radicand();
  j["records"] = records;
  j["text"] = e.str();
  return j;
}

// ---- commands --------------------------------------------------------------

int cmd_hilbert(const Args& a) {
  if (a.positional.size() != 2) throw ValidationError("hilbert needs two arguments a and b");
  Rat x = parse_rational_arg(a.positional[0]);
  Rat y = parse_rational_arg(a.positional[1]);
  Place v = Place::parse(a.require_option("place"));
  int s = qform::hilbert_symbol(x, y, v);
  Json j{{"command", "hilbert"},
         {"a", a.positional[0]},
         {"b", a.positional[1]},
         {"place", repro::place_json(v)},
         {"symbol", s}};
  emit(j, a.has_flag("json"), std::to_string(s));
  return 0;
}

int cmd_hasse(const Args& a) {
  if (a.positional.size() != 1) throw ValidationError("hasse needs one form argument");
  qform::DiagonalForm f = qform::parse_form(a.positional[0]);
  Place v = Place::parse(a.require_option("place"));
  int eps = qform::hasse_invariant(f, v);
  Json j{{"command", "hasse"},
         {"form", qform::format_form(f)},
         {"place", repro::place_json(v)},
         {"hasse", eps}};
  emit(j, a.has_flag("json"), std::to_string(eps));
  return 0;
}

int cmd_witt(const Args& a) {
  if (a.positional.size() != 1) throw ValidationError("witt needs one form argument");
  qform::DiagonalForm f = qform::parse_form(a.positional[0]);
  Place v = Place::parse(a.require_option("place"));
  qform::WittDecomposition dec = qform::witt_decompose(f, v);
  Json j{{"command", "witt"},
         {"form", qform::format_form(f)},
         {"place", repro::place_json(v)},
         {"witt_index", dec.witt_index},
         {"anisotropic_kernel", repro::local_invariants_json(dec.anisotropic)}};
  emit(j, a.has_flag("json"), std::to_string(dec.witt_index));
  return 0;
}

int cmd_isotropy(const Args& a) {
  if (a.positional.size() != 1) throw ValidationError("isotropy needs one form argument");
  qform::DiagonalForm f = qform::parse_form(a.positional[0]);
  bool result;
  Json j{{"command", "isotropy"}, {"form", qform::format_form(f)}};
  if (a.has_flag("global")) {
    result = qform::is_isotropic_over_Q(f);
    j["scope"] = "Q";
  } else {
    Place v = Place::parse(a.require_option("place"));
    if (v.is_real()) {
      result = qform::witt_index_real(f) > 0;
    } else {
      result = qform::is_isotropic_local(f, v.prime_value());
    }
    j["place"] = repro::place_json(v);
  }
  j["isotropic"] = result;
  emit(j, a.has_flag("json"), result ? "true" : "false");
  return result ? 0 : 1;
}

int cmd_isometry_zp(const Args& a) {
  if (a.positional.size() != 1) throw ValidationError("isometry-zp needs one form argument");
  qform::DiagonalForm f = qform::parse_form(a.positional[0]);
  std::vector<Int> coeffs;
  for (const Rat& c : f.coefficients()) {
    if (c.get_den() != 1) throw ValidationError("isometry-zp expects integer coefficients");
    coeffs.emplace_back(c.get_num());
  }
  Int p(a.require_option("p"), 10);
  int precision = read_precision(a);
  auto [ok, cert] = zp::negation_isometric_zp(coeffs, p, precision);
  bool verified = ok && zp::verify_certificate(cert, coeffs);
  Json j{{"command", "isometry-zp"},
         {"form", qform::format_form(f)},
         {"p", p.get_str()},
         {"isometric", ok},
         {"verified", verified},
         {"certificate", repro::certificate_json(cert)}};
  emit(j, a.has_flag("json"),
       std::string(verified ? "true" : "false") + " (" + cert.method_name() + ")");
  return verified ? 0 : 1;
}

long parse_radicand(const Args& a) {
  std::string text = a.option_or("radicand", "0");
  try {
    return std::stol(text);
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse radicand '" + text + "'");
  }
}

int cmd_clifford(const Args& a) {
  if (a.positional.empty()) throw ValidationError("clifford needs at least one element");
  qform::DiagonalForm f = qform::parse_form(a.require_option("form"));
  auto alg = clifford::make_algebra(f, parse_radicand(a));
  clifford::CliffordElem acc = parse_element(alg, a.positional[0]);
  for (size_t i = 1; i < a.positional.size(); ++i) {
    acc = clifford::clifford_mul(acc, parse_element(alg, a.positional[i]));
  }
  Json j{{"command", "clifford"}, {"form", qform::format_form(f)},
         {"product", element_json(acc)}};
  emit(j, a.has_flag("json"), acc.str());
  return 0;
}

int cmd_spin_check(const Args& a) {
  if (a.positional.size() != 1) throw ValidationError("spin-check needs one element");
  qform::DiagonalForm f = qform::parse_form(a.require_option("form"));
  auto alg = clifford::make_algebra(f, parse_radicand(a));
  clifford::CliffordElem g = parse_element(alg, a.positional[0]);
  clifford::SpinWitness w = clifford::is_spin(g);
  Json j{{"command", "spin-check"},
         {"form", qform::format_form(f)},
         {"element", element_json(g)},
         {"even", w.even_ok},
         {"invertible", w.invertible},
         {"preserves_v", w.preserves_v},
         {"star_unital", w.star_unital},
         {"spin", w.all_ok()}};
  std::string text = std::string("even=") + (w.even_ok ? "yes" : "no") +
                     " invertible=" + (w.invertible ? "yes" : "no") +
                     " preserves-V=" + (w.preserves_v ? "yes" : "no") +
                     " star-unital=" + (w.star_unital ? "yes" : "no");
  bool ok = w.all_ok();
  if (ok && a.has_flag("integral")) {
    std::vector<Int> inverted = parse_int_list(a.option_or("invert", ""));
    bool integral = clifford::is_integral_point(g, inverted);
    j["integral_point"] = integral;
    text += std::string(" integral=") + (integral ? "yes" : "no");
    ok = integral;
  }
  emit(j, a.has_flag("json"), text + (w.all_ok() ? " => spin" : " => not spin"));
  return ok ? 0 : 1;
}

int cmd_csp(const Args& a) {
  qform::DiagonalForm f = qform::parse_form(a.require_option("form"));
  std::vector<Place> s = parse_place_list(a.require_option("places"));
  l2::CspReport r = l2::csp_hypotheses(f, s);
  Json j = repro::csp_json(r);
  j["command"] = "csp";
  j["form"] = qform::format_form(f);
  emit(j, a.has_flag("json"),
       r.conclusion() + " (witt sum " + std::to_string(r.witt_sum) + ")");
  return r.holds() ? 0 : 1;
}

int cmd_support(const Args& a) {
  qform::DiagonalForm f = qform::parse_form(a.require_option("form"));
  std::vector<Place> s = parse_place_list(a.require_option("places"));
  l2::SupportOptions options{a.has_flag("assume-small-residue-ok")};
  std::vector<l2::SupportSet> parts;
  Json factors = Json::array();
  std::string text;
  for (const Place& v : s) {
    auto d = l2::derive_factor(f, v);
    auto local = l2::local_l2_support(d, options);
    if (local.warning) std::cerr << "warning: " << *local.warning << "\n";
    parts.push_back(local.support);
    Json fj = repro::factor_json(d);
    fj["support"] = repro::support_json(local.support);
    factors.push_back(fj);
    text += d.place.str() + ": " + local.support.str() + "\n";
  }
  l2::SupportSet total = l2::kunneth_support(parts);
  Json j{{"command", "support"},
         {"form", qform::format_form(f)},
         {"factors", factors},
         {"support", repro::support_json(total)}};
  emit(j, a.has_flag("json"), text + "total: " + total.str());
  return 0;
}

int cmd_primes(const Args& a) {
  int count = std::stoi(a.option_or("count", "1"));
  Int min(a.option_or("min", "89"), 10);
  auto primes = padic::primes_in_progression(count, min);
  Json arr = Json::array();
  std::string text;
  for (const auto& p : primes) {
    Json j{{"value", p.value.get_str()},
           {"congruent_1_mod_8", p.congruent_1_mod_8},
           {"congruent_2_mod_3", p.congruent_2_mod_3},
           {"at_least_89", p.at_least_89}};
    arr.push_back(j);
    if (!text.empty()) text += " ";
    text += p.value.get_str();
  }
  emit(Json{{"command", "primes"}, {"primes", arr}}, a.has_flag("json"), text);
  return 0;
}

int cmd_repro(const Args& a) {
  repro::PipelineConfig config;
  config.k = std::stoi(a.option_or("k", "2"));
  if (a.options.count("primes")) config.primes = parse_int_list(a.options.at("primes"));
  config.sampled_primes_bound = std::stoi(a.option_or("bound", "300"));
  config.precision = read_precision(a);
  config.assume_small_residue_ok = a.has_flag("assume-small-residue-ok");
  repro::TheoremReport report = repro::run_theorem_pipeline(config);
  // The report itself is the output; step summary goes to stderr.
  for (const auto& step : report.steps) {
    std::cerr << (step.pass ? "pass" : "FAIL") << "  " << step.name << ": " << step.detail
              << "\n";
  }
  std::cout << report.to_json().dump(2) << "\n";
  return report.conclusion_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    std::cout << kUsage;
    return 0;
  }
  try {
    Args args = parse_args(argc, argv, 2);
    if (args.has_flag("help")) {
      std::cout << kUsage;
      return 0;
    }
    if (command == "hilbert") return cmd_hilbert(args);
    if (command == "hasse") return cmd_hasse(args);
    if (command == "witt") return cmd_witt(args);
    if (command == "isotropy") return cmd_isotropy(args);
    if (command == "isometry-zp") return cmd_isometry_zp(args);
    if (command == "clifford") return cmd_clifford(args);
    if (command == "spin-check") return cmd_spin_check(args);
    if (command == "csp") return cmd_csp(args);
    if (command == "support") return cmd_support(args);
    if (command == "primes") return cmd_primes(args);
    if (command == "repro") return cmd_repro(args);
    std::cerr << "unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const FormParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedCaseError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const InsufficientPrecisionError& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return 1;
  } catch (const PipelineError& e) {
    std::cerr << "pipeline failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
