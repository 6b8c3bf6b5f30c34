// brm: command line front end.
//
//   brm apply --n 4 --m 2 --word s1 --entry 2 2
//   brm verify braid --n 4 --m 3 --mode modular --points 20 --seed 7
//   brm paths enumerate --n 4 --m 2 --r 3 --k 5 --mode exact --format json
//   brm paths gf tau --n 4 --m 2 --r 3 --k 5
//   brm specialfn sigma --n 4 --window 1 2 --k 5 --r 3
//   brm closed-form --n 3 --m 4 --i 1 --j 4 --k 2 --family first --target 2 1
//
// Words are read in the usual composition order: in s2*s3*s1*s2 the
// rightmost generator acts first.  --letters-first reads them left to right.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or input error,
// 3 enumeration guard exceeded.

#include "brm/cylnet.hpp"
#include "brm/formulas.hpp"
#include "brm/rmatrix.hpp"
#include "brm/serialize.hpp"
#include "brm/specialfn.hpp"
#include "brm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

using namespace brm;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --config file.json: every key becomes --key value unless given explicitly.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("bad config " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");

  auto given = [&](const std::string& flag) {
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  auto scalar = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };

  // a leading "command" ("verify braid") is used when argv has none
  if (cfg.contains("command") && (args.size() == 1 || args[1].rfind("--", 0) == 0)) {
    std::istringstream words(cfg["command"].get<std::string>());
    std::vector<std::string> cmd{std::istream_iterator<std::string>(words), {}};
    args.insert(args.begin() + 1, cmd.begin(), cmd.end());
  }
  for (const auto& [key, v] : cfg.items()) {
    if (key == "command") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (given(flag)) continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back(flag);
    } else if (v.is_array()) {
      args.push_back(flag);
      for (const auto& e : v) args.push_back(scalar(e));
    } else {
      args.push_back(flag);
      args.push_back(scalar(v));
    }
  }
  return args;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(std::ostream& os, const RationalFunction& f, Format fmt) {
  if (fmt == Format::Json)
    os << to_json(f).dump() << '\n';
  else
    os << render(f, fmt) << '\n';
}

void emit_tuple(std::ostream& os, const Tuple<FactoredRational>& t, Format fmt, int lo, int hi) {
  if (fmt == Format::Json) {
    json entries = json::array();
    for (int i = lo; i <= hi; ++i) {
      json v = json::array();
      for (int r = 1; r <= t.n(); ++r) v.push_back(to_json(t.at(i, r).expand()));
      entries.push_back(std::move(v));
    }
    json out{{"n", t.n()}, {"m", t.m()}, {"entries", std::move(entries)}};
    if (lo != 1 || hi != t.m()) out["first"] = lo;
    os << out.dump() << '\n';
    return;
  }
  for (int i = lo; i <= hi; ++i)
    for (int r = 1; r <= t.n(); ++r) {
      Variable v{i, r};
      std::string name = fmt == Format::Latex ? to_latex(Monomial(v)) : to_text(Monomial(v));
      os << name << " -> " << render(t.at(i, r).expand(), fmt) << '\n';
    }
}

json family_json(const PathFamily& f) {
  json paths = json::array();
  for (const auto& p : f.paths) paths.push_back({{"source", p.source}, {"steps", p.step_string()}});
  return {{"paths", std::move(paths)}, {"degree", f.degree()}, {"weight", to_json(f.weight())}};
}

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"latex", Format::Latex}, {"json", Format::Json}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"birational R-matrix: symbolic action, closed forms and path oracles"};
  app.require_subcommand(1);

  Format fmt = Format::Text;
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "text, latex or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("-o,--output", output, "write to a file instead of stdout");
  };

  // apply
  int n = 0, m = 0;
  std::string word_text;
  std::vector<int> perm;
  bool letters_first = false;
  std::vector<int> entry;
  auto* apply = app.add_subcommand("apply", "apply a word or permutation to the symbolic tuple");
  apply->add_option("--n", n, "vector length")->required()->check(CLI::Range(2, 63));
  apply->add_option("--m", m, "number of vectors")->required()->check(CLI::Range(1, 1023));
  auto* word_opt = apply->add_option("--word", word_text, "s2*s3*s1*s2 or [2,3,1,2]");
  apply->add_option("--perm", perm, "permutation in one-line notation")->excludes(word_opt);
  apply->add_flag("--letters-first", letters_first, "the leftmost letter acts first");
  apply->add_option("--entry", entry, "print only entry i r")->expected(2);
  add_common(apply);

  // verify
  std::string suite;
  VerifyConfig vc;
  std::string mode_text = "symbolic";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or all")->required();
  verify->add_option("--n", vc.n, "single n");
  verify->add_option("--m", vc.m, "single m");
  verify->add_option("--max-n", vc.max_n, "largest n")->capture_default_str();
  verify->add_option("--max-m", vc.max_m, "largest m")->capture_default_str();
  verify->add_option("--max-span", vc.max_span, "largest j - i for the formula suites");
  verify->add_option("--mode", mode_text, "symbolic or modular")
      ->check(CLI::IsMember({"symbolic", "modular"}))
      ->capture_default_str();
  verify->add_option("--prime", vc.prime, "modulus for modular mode")->envname("BRM_PRIME");
  verify->add_option("--seed", vc.seed, "random seed")->envname("BRM_SEED")->capture_default_str();
  verify->add_option("--points", vc.points, "evaluation points per case")->capture_default_str();
  verify->add_option("--words", vc.words, "random words per (n, m) for loop-energy");
  verify->add_flag("--timing", timing, "include timings in the report");
  add_common(verify);

  // paths
  long long r = 1;
  int k = 0, cut = 1;
  std::string deg_mode = "exact";
  auto* paths = app.add_subcommand("paths", "highway path families on the cylindric network");
  paths->require_subcommand(1);
  auto* enumerate = paths->add_subcommand("enumerate", "list the families of a tau class");
  auto* gf = paths->add_subcommand("gf", "generating function of a family class");
  std::string gf_kind;
  gf->add_option("kind", gf_kind, "tau, sigma, sigmabar or omega")
      ->required()
      ->check(CLI::IsMember({"tau", "sigma", "sigmabar", "omega"}));
  for (auto* sub : {enumerate, gf}) {
    sub->add_option("--n", n)->required()->check(CLI::Range(2, 63));
    sub->add_option("--m", m)->required()->check(CLI::Range(1, 64));
    sub->add_option("--r", r)->required();
    sub->add_option("--k", k, "degree");
    add_common(sub);
  }
  enumerate->add_option("--mode", deg_mode, "exact or le")->check(CLI::IsMember({"exact", "le"}));
  gf->add_option("--cut", cut, "cut position for omega");

  // specialfn
  std::string fn_kind;
  std::vector<int> window;
  auto* special = app.add_subcommand("specialfn", "tau, sigma, sigma-bar, Omega or P on a window");
  special->add_option("kind", fn_kind)
      ->required()
      ->check(CLI::IsMember({"tau", "sigma", "sigmabar", "omega", "p"}));
  special->add_option("--n", n)->required()->check(CLI::Range(2, 63));
  special->add_option("--window", window, "i j")->required()->expected(2);
  special->add_option("--k", k);
  special->add_option("--r", r)->required();
  special->add_option("--cut", cut, "cut position for omega");
  add_common(special);

  // closed-form
  int ci = 0, cj = 0;
  std::string family = "first";
  std::vector<int> target;
  bool check = false;
  auto* closed = app.add_subcommand("closed-form", "closed form of 1-shifts and transpositions");
  closed->add_option("--n", n)->required()->check(CLI::Range(2, 63));
  closed->add_option("--m", m)->required()->check(CLI::Range(2, 1023));
  closed->add_option("--i", ci)->required();
  closed->add_option("--j", cj)->required();
  closed->add_option("--k", k);
  closed->add_option("--family", family, "first, dual, down or up")
      ->check(CLI::IsMember({"first", "dual", "down", "up"}));
  closed->add_option("--target", target, "entry i r")->expected(2);
  closed->add_flag("--check", check, "compare with the direct action");
  add_common(closed);

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "brm: " << e.what() << '\n';
    return kUsage;
  }
  std::vector<char*> cargs;
  for (auto& a : args) cargs.push_back(a.data());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output out(output);
    std::ostream& os = out.os();

    if (*apply) {
      Word w;
      if (!perm.empty()) {
        if (static_cast<int>(perm.size()) != m || !is_permutation(perm))
          throw UsageError("--perm must be a permutation of 1..m");
        w = reduced_word(perm);
      } else {
        w = parse_word(word_text, letters_first);
      }
      for (int letter : w)
        if (letter < 1 || letter >= m)
          throw UsageError("generator s" + std::to_string(letter) + " needs 1 <= i < m");
      auto t = apply_word(symbolic_tuple<FactoredRational>(n, m), w);
      if (!entry.empty()) {
        if (entry[0] < 1 || entry[0] > m) throw UsageError("entry index outside 1..m");
        emit(os, t.at(entry[0], entry[1]).expand(), fmt);
      } else {
        emit_tuple(os, t, fmt, 1, m);
      }
      return kOk;
    }

    if (*verify) {
      vc.mode = parse_mode(mode_text);
      std::vector<VerifyReport> reports;
      if (suite == "all")
        reports = run_all(vc);
      else
        reports.push_back(run_suite(suite, vc));
      bool ok = true;
      for (const auto& rep : reports) ok = ok && rep.passed();
      if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(rep.to_json(timing));
        os << json{{"status", ok ? "pass" : "fail"}, {"suites", std::move(arr)}}.dump(2) << '\n';
      } else {
        for (const auto& rep : reports) {
          os << rep.summary(timing) << '\n';
          if (const auto* f = rep.first_failure()) {
            if (!f->note.empty()) os << "  note: " << f->note << '\n';
            if (!f->lhs.empty()) os << "  lhs:  " << f->lhs << '\n';
            if (!f->rhs.empty()) os << "  rhs:  " << f->rhs << '\n';
          }
        }
        os << (ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (*enumerate) {
      auto mode = deg_mode == "le" ? DegreeMode::AtMost : DegreeMode::Exact;
      auto fams = enumerate_families(tau_class(n, m, r, k, mode));
      if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& f : fams) arr.push_back(family_json(f));
        os << arr.dump() << '\n';
      } else {
        for (const auto& f : fams) {
          os << "degree " << f.degree() << "  weight "
             << (fmt == Format::Latex ? to_latex(f.weight()) : to_text(f.weight())) << " ";
          for (const auto& p : f.paths) os << " " << p.source << ":" << p.step_string();
          os << '\n';
        }
        os << fams.size() << " families\n";
      }
      return kOk;
    }

    if (*gf) {
      check_guard(n, m);
      Polynomial p;
      if (gf_kind == "tau") p = gen_tau(n, m, r, k);
      else if (gf_kind == "sigma") p = gen_sigma(n, m, r, k);
      else if (gf_kind == "sigmabar") p = gen_sigma_bar(n, m, r, k);
      else p = gen_omega(n, m, r, cut);
      emit(os, p, fmt);
      return kOk;
    }

    if (*special) {
      const int i = window[0], j = window[1];
      Polynomial p;
      if (fn_kind == "tau") p = tau(n, i, j, k, r);
      else if (fn_kind == "sigma") p = sigma(n, i, j, k, r);
      else if (fn_kind == "sigmabar") p = sigma_bar(n, i, j, k, r);
      else if (fn_kind == "omega") p = omega(n, i, j, cut, r);
      else p = p_fn(n, i, j, k, r);
      emit(os, p, fmt);
      return kOk;
    }

    if (*closed) {
      Word w;
      Tuple<FactoredRational> t = symbolic_tuple<FactoredRational>(n, m);
      int lo = ci, hi = cj;
      if (ci < 1 || cj > m || ci >= cj) throw UsageError("need 1 <= i < j <= m");
      if (family == "down" || family == "up") {
        Shift dir = family == "down" ? Shift::Down : Shift::Up;
        w = oneshift_word(ci, cj, dir);
        for (int p = ci; p <= cj; ++p)
          for (int rr = 1; rr <= n; ++rr) t.at(p, rr) = oneshift_action(n, ci, cj, p, rr, dir);
      } else {
        Family fam = family == "first" ? Family::First : Family::Dual;
        w = family_word(ci, cj, k, fam);
        t = full_action(n, m, ci, cj, k, fam);
      }
      if (check) {
        auto direct = apply_word(symbolic_tuple<FactoredRational>(n, m), w);
        for (int p = lo; p <= hi; ++p)
          for (int rr = 1; rr <= n; ++rr)
            if (!equivalent(direct.at(p, rr), t.at(p, rr))) {
              std::cerr << "mismatch at entry (" << p << "," << rr << ")\n";
              return kVerifyFailed;
            }
      }
      if (!target.empty()) {
        if (target[0] < lo || target[0] > hi) throw UsageError("target outside the window i..j");
        emit(os, t.at(target[0], target[1]).expand(), fmt);
      } else {
        emit_tuple(os, t, fmt, lo, hi);
      }
      if (check) std::cerr << "closed forms agree with the direct action\n";
      return kOk;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "brm: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "brm: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
