#include "cli.hpp"

#include "json_io.hpp"
#include "supcalc/corpus.hpp"
#include "supcalc/denote.hpp"
#include "supcalc/error.hpp"
#include "supcalc/laws.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/veccodec.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace supcalc::cli {

namespace {

struct Options {
  std::string semiring = "qnn";
  bool json = false;
  std::uint64_t seed = 0;
  std::string file;
  std::string ctx;
  std::string strategy = "lo";
  bool aggregate = false;
  std::string matrix, from, to, vec;
  std::size_t trials = 200;
  std::size_t max_dim = 5;
  std::string export_dir;
};

struct Loaded {
  Term term;
  Context context;
  std::optional<Proposition> type;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err), s_(semiring(*parse_semiring_kind(o.semiring))) {}

  int parse() {
    Loaded l = load();
    if (o_.json) {
      out_ << Json{{"term", l.term.to_string()}, {"context", l.context.to_string()}}.dump(2) << "\n";
    } else {
      out_ << l.term.to_string() << "\n";
    }
    return kExitOk;
  }

  int check() {
    Loaded l = load();
    Derivation d = typecheck(l.context, l.term, l.type);
    if (o_.json) {
      out_ << Json{{"type", d.type.to_string()}, {"derivation", derivation_json(d)}}.dump(2) << "\n";
    } else {
      out_ << d.type.to_string() << "\n";
    }
    return kExitOk;
  }

  int run() {
    Loaded l = load();
    typecheck(l.context, l.term, l.type);
    ReduceOptions ro{strategy(), o_.seed};
    Term nf = normalize(l.term, ro, s_);
    if (o_.json) {
      out_ << Json{{"normal_form", nf.to_string()}}.dump(2) << "\n";
    } else {
      out_ << nf.to_string() << "\n";
    }
    return kExitOk;
  }

  int distro() {
    Loaded l = load();
    typecheck(l.context, l.term, l.type);
    Distribution d = distribution(l.term, s_);
    if (o_.aggregate) d = aggregate(d, s_);
    if (o_.json) {
      out_ << distribution_json(d).dump(2) << "\n";
    } else {
      for (const auto& o : d) out_ << o.weight.to_string() << "\t" << o.value.to_string() << "\n";
    }
    return kExitOk;
  }

  int denote() {
    Loaded l = load();
    Derivation d = typecheck(l.context, l.term, l.type);
    model::Mat m = supcalc::denote(d, s_).matrix;
    if (o_.json) {
      Json j = matrix_json(m);
      j["type"] = d.type.to_string();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << m.rows() << "x" << m.cols() << "\n" << m.to_string();
    }
    return kExitOk;
  }

  int soundness() {
    Loaded l = load();
    typecheck(l.context, l.term, l.type);
    StepSoundnessReport step = check_step_soundness(l.term, l.context, s_);
    bool global = check_global_soundness(l.term, l.context, s_);
    if (o_.json) {
      Json rules = Json::array();
      for (auto r : step.rules) rules.push_back(to_string(r));
      out_ << Json{{"redexes", step.redexes_checked},
                   {"rules", std::move(rules)},
                   {"step", step.ok()},
                   {"global", global},
                   {"violations", step.violations}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "redexes checked: " << step.redexes_checked << "\n";
      out_ << "step soundness: " << (step.ok() ? "PASS" : "FAIL") << "\n";
      for (const auto& v : step.violations) out_ << "  " << v << "\n";
      out_ << "global soundness: " << (global ? "PASS" : "FAIL") << "\n";
    }
    return step.ok() && global ? kExitOk : kExitFailure;
  }

  int encode() {
    Proposition a = parse_proposition(o_.from), b = parse_proposition(o_.to);
    Term t = encode_matrix(parse_matrix_literal(o_.matrix, s_), a, b);
    if (o_.json) {
      out_ << Json{{"term", t.to_string()}, {"type", Proposition::lollipop(a, b).to_string()}}.dump(2) << "\n";
    } else {
      out_ << t.to_string() << "\n";
    }
    return kExitOk;
  }

  int apply() {
    Loaded l = load();
    Derivation d = typecheck(l.context, l.term, l.type);
    if (!l.context.empty()) throw Error("apply needs a closed term");
    const Proposition& ty = d.type;
    if (ty.kind() != PropKind::Lollipop || !is_v(ty.left()) || !is_v(ty.right())) {
      throw UnsupportedType("apply needs a map between propositions built from one and &, got " + ty.to_string());
    }
    Term arg = from_vector(parse_vector_literal(o_.vec, s_), ty.left());
    SVector v = expected_vector(Term::app(d.term, arg), ty.right(), s_);
    if (o_.json) {
      Json entries = Json::array();
      for (const auto& e : v.entries) entries.push_back(e.to_string());
      out_ << Json{{"vector", std::move(entries)}, {"type", ty.right().to_string()}}.dump(2) << "\n";
    } else {
      out_ << v.to_string() << "\n";
    }
    return kExitOk;
  }

  int laws() {
    model::LawReport r = model::check_laws({o_.seed, o_.trials, o_.max_dim}, s_);
    if (o_.json) {
      Json fams = Json::array();
      for (const auto& f : r.families) {
        fams.push_back(Json{{"id", f.id},
                            {"name", f.name},
                            {"checks", f.checks},
                            {"failures", f.failures},
                            {"passed", f.passed()},
                            {"first_failure", f.first_failure}});
      }
      out_ << Json{{"semiring", std::string(s_.name())},
                   {"families", std::move(fams)},
                   {"control_checks", r.control_checks},
                   {"control_rejections", r.control_rejections},
                   {"passed", r.all_pass()}}
                  .dump(2)
           << "\n";
    } else {
      for (const auto& f : r.families) {
        out_ << std::setw(2) << f.id << "  " << std::left << std::setw(44) << f.name << std::right << std::setw(7)
             << f.checks << " checks  " << (f.passed() ? "PASS" : "FAIL");
        if (!f.passed() && !f.first_failure.empty()) out_ << "  (" << f.first_failure << ")";
        out_ << "\n";
      }
      out_ << "    negative control: " << r.control_rejections << "/" << r.control_checks << " rejected  "
           << (r.control_ok() ? "PASS" : "FAIL") << "\n";
    }
    return r.all_pass() ? kExitOk : kExitFailure;
  }

  int corpus() {
    if (!o_.export_dir.empty()) {
      std::filesystem::create_directories(o_.export_dir);
      for (const auto& e : supcalc::corpus()) {
        std::ofstream f(std::filesystem::path(o_.export_dir) / (e.name + ".lsup"));
        f << "-- type: " << e.type.to_string() << "\n" << e.term.to_string() << "\n";
        if (!f) throw Error("cannot write " + e.name + ".lsup");
      }
      out_ << "wrote " << supcalc::corpus().size() << " files to " << o_.export_dir << "\n";
      return kExitOk;
    }
    if (o_.json) {
      Json all = Json::array();
      for (const auto& e : supcalc::corpus()) {
        all.push_back(Json{{"name", e.name}, {"term", e.term.to_string()}, {"type", e.type.to_string()}});
      }
      out_ << all.dump(2) << "\n";
    } else {
      for (const auto& e : supcalc::corpus()) out_ << e.name << "\t" << e.type.to_string() << "\n";
    }
    return kExitOk;
  }

 private:
  Loaded load() {
    std::ifstream f(o_.file);
    if (!f) throw Error("cannot read " + o_.file);
    std::stringstream buf;
    buf << f.rdbuf();
    Source src = [&] {
      try {
        return parse_source(buf.str(), s_);
      } catch (const SyntaxError& e) {
        throw Error(o_.file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
      }
    }();
    Loaded l{src.term, src.context, src.type};
    if (!o_.ctx.empty()) l.context = parse_context(o_.ctx);
    return l;
  }

  Strategy strategy() const {
    if (o_.strategy == "ro") return Strategy::RightmostOutermost;
    if (o_.strategy == "li") return Strategy::LeftmostInnermost;
    if (o_.strategy == "ri") return Strategy::RightmostInnermost;
    if (o_.strategy == "random") return Strategy::Random;
    return Strategy::LeftmostOutermost;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  const Semiring& s_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Typed calculus with weighted superposition: checker, evaluator and matrix model", "supcalc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--semiring", o.semiring, "Scalars: qnn (default), q, bool, f64")
      ->check(CLI::IsMember({"qnn", "q", "bool", "f64"}));
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for random strategies and law trials");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "Term file (.lsup)")->required();
    c->add_option("--ctx", o.ctx, "Typing context, e.g. \"x:one, y:one & one\"");
    return c;
  };
  auto* parse = file_cmd("parse", "Print the term in canonical form");
  auto* check = file_cmd("check", "Print the type of the term");
  auto* run = file_cmd("run", "Print the normal form; fails on a weighted choice");
  run->add_option("--strategy", o.strategy, "lo, ro, li, ri or random")
      ->check(CLI::IsMember({"lo", "ro", "li", "ri", "random"}));
  auto* distro = file_cmd("distro", "Print every weighted outcome");
  distro->add_flag("--aggregate", o.aggregate, "Merge equal outcomes");
  auto* denote = file_cmd("denote", "Print the matrix of the term");
  auto* soundness = file_cmd("soundness", "Check every step and the whole distribution against the matrix");
  auto* encode = app.add_subcommand("encode", "Print a term computing a matrix");
  encode->add_option("--matrix", o.matrix, "JSON array of rows")->required();
  encode->add_option("--from", o.from, "Domain proposition")->required();
  encode->add_option("--to", o.to, "Codomain proposition")->required();
  auto* apply = file_cmd("apply", "Apply a map term to a vector");
  apply->add_option("--vec", o.vec, "JSON array or (a, b, ...)")->required();
  auto* laws = app.add_subcommand("laws", "Check the matrix model's equations on random instances");
  laws->add_option("--trials", o.trials, "Instances per family")->check(CLI::PositiveNumber);
  laws->add_option("--max-dim", o.max_dim, "Largest object dimension")->check(CLI::PositiveNumber);
  auto* corpus = app.add_subcommand("corpus", "List the bundled terms");
  corpus->add_option("--export", o.export_dir, "Write each term to DIR/<name>.lsup");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Runner r(o, out, err);
    if (*parse) return r.parse();
    if (*check) return r.check();
    if (*run) return r.run();
    if (*distro) return r.distro();
    if (*denote) return r.denote();
    if (*soundness) return r.soundness();
    if (*encode) return r.encode();
    if (*apply) return r.apply();
    if (*laws) return r.laws();
    if (*corpus) return r.corpus();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace supcalc::cli
