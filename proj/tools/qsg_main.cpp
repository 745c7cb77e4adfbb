// qsg — exact calculus on semigroup translation algebras with a
// truncated-matrix verification harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input schema
// error, 3 instance configuration error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "qsg/coalgebra.hpp"
#include "qsg/json_io.hpp"
#include "qsg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;

struct CliError {
  int code;
  std::string message;
};

qsg::Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return qsg::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError{kExitUsage, what + ": " + e.what()};
  }
}

qsg::Json load_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, what + ": cannot open " + path};
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json_text(text, what + " (" + path + ")");
}

// --instance accepts inline JSON or a path; QSG_INSTANCE supplies the
// default.
qsg::Semigroup load_instance(std::string spec) {
  if (spec.empty()) {
    if (const char* env = std::getenv("QSG_INSTANCE")) spec = env;
  }
  if (spec.empty())
    throw CliError{kExitConfig,
                   "no instance: pass --instance or set QSG_INSTANCE"};
  try {
    if (!spec.empty() && spec.front() == '{')
      return qsg::instance_from_json(qsg::Json::parse(spec));
    std::ifstream in(spec);
    if (!in) throw CliError{kExitConfig, "cannot open instance file " + spec};
    qsg::Json j = qsg::Json::parse(in);
    return qsg::instance_from_json(j);
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, std::string("bad instance config: ") + e.what()};
  }
}

void write_output(const qsg::Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliError{kExitUsage, "cannot write " + out_path};
  out << text;
}

qsg::Element load_element(const qsg::Semigroup& s, const std::string& path) {
  qsg::Json j = load_json_file(path, "element");
  try {
    return qsg::element_from_json(s, j);
  } catch (const qsg::InstanceMismatchError& e) {
    throw CliError{kExitConfig, e.what()};
  } catch (const qsg::Error& e) {
    throw CliError{kExitUsage, e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus and numerical verification for semigroup "
               "translation algebras"};
  app.require_subcommand(1);

  std::string instance_spec;
  std::string out_path;
  app.add_option("--instance,-i", instance_spec,
                 "instance config: inline JSON or path (default: "
                 "$QSG_INSTANCE)")
      ->envname("QSG_INSTANCE");
  app.add_option("--out,-o", out_path, "output file (default: stdout)");

  // ideal
  auto* cmd_ideal = app.add_subcommand(
      "ideal", "canonical form of w.S for a word like \"3^-1 5\"");
  std::string word_text;
  cmd_ideal->add_option("word", word_text, "word in the free monoid")
      ->required();

  // normalize / unary element commands
  std::string elem_path, elem_path2;
  auto* cmd_normalize =
      app.add_subcommand("normalize", "canonical form of an element");
  cmd_normalize->add_option("element", elem_path, "element JSON file")
      ->required();
  auto* cmd_adjoint = app.add_subcommand("adjoint", "star of an element");
  cmd_adjoint->add_option("element", elem_path, "element JSON file")
      ->required();
  auto* cmd_delta =
      app.add_subcommand("delta", "comultiplication of an element");
  cmd_delta->add_option("element", elem_path, "element JSON file")->required();
  auto* cmd_quotient = app.add_subcommand(
      "quotient", "image in the group algebra (kills commutators)");
  cmd_quotient->add_option("element", elem_path, "element JSON file")
      ->required();

  auto* cmd_mul = app.add_subcommand("mul", "product of two elements");
  cmd_mul->add_option("x", elem_path, "left element JSON file")->required();
  cmd_mul->add_option("y", elem_path2, "right element JSON file")->required();
  auto* cmd_comm = app.add_subcommand("commutator", "xy - yx");
  cmd_comm->add_option("x", elem_path, "left element JSON file")->required();
  cmd_comm->add_option("y", elem_path2, "right element JSON file")->required();

  // verify / report
  auto* cmd_verify =
      app.add_subcommand("verify", "run verification suites, emit a report");
  std::vector<std::string> suites;
  long window = 0, samples = 0, grid = 4096;
  std::uint64_t seed = 1;
  bool strict = false;
  cmd_verify
      ->add_option("--suite", suites,
                   "eq7|products|relations|wd|quotient|cros|ideals|"
                   "independence")
      ->required();
  cmd_verify->add_option("--window", window, "window bound (0 = default)");
  cmd_verify->add_option("--seed", seed, "sampler seed");
  cmd_verify->add_option("--samples", samples, "sample count (0 = default)");
  cmd_verify->add_option("--grid", grid, "torus grid for symbol norms");
  cmd_verify->add_flag("--strict", strict,
                       "treat window_too_small cases as failures");

  auto* cmd_report =
      app.add_subcommand("report", "run every applicable suite");
  cmd_report->add_option("--window", window, "window bound (0 = default)");
  cmd_report->add_option("--seed", seed, "sampler seed");
  cmd_report->add_option("--samples", samples, "sample count (0 = default)");
  cmd_report->add_option("--grid", grid, "torus grid for symbol norms");
  cmd_report->add_flag("--strict", strict,
                       "treat window_too_small cases as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const qsg::Semigroup s = load_instance(instance_spec);

    if (cmd_ideal->parsed()) {
      qsg::Word w;
      try {
        w = qsg::parse_word(s, word_text);
      } catch (const qsg::InstanceMismatchError& e) {
        throw CliError{kExitConfig, e.what()};
      } catch (const qsg::Error& e) {
        throw CliError{kExitUsage, e.what()};
      }
      write_output(qsg::ideal_to_json(s, qsg::act(s, w, qsg::full_ideal(s))),
                   out_path);
      return kExitOk;
    }

    if (cmd_normalize->parsed()) {
      write_output(qsg::element_to_json(s, load_element(s, elem_path)),
                   out_path);
      return kExitOk;
    }
    if (cmd_adjoint->parsed()) {
      write_output(
          qsg::element_to_json(s, qsg::star(s, load_element(s, elem_path))),
          out_path);
      return kExitOk;
    }
    if (cmd_delta->parsed()) {
      write_output(
          qsg::tensor_to_json(s, qsg::delta(s, load_element(s, elem_path))),
          out_path);
      return kExitOk;
    }
    if (cmd_quotient->parsed()) {
      write_output(
          qsg::group_algebra_to_json(
              s, qsg::quotient_to_group_algebra(s, load_element(s, elem_path))),
          out_path);
      return kExitOk;
    }
    if (cmd_mul->parsed()) {
      write_output(
          qsg::element_to_json(s, qsg::mul(s, load_element(s, elem_path),
                                           load_element(s, elem_path2))),
          out_path);
      return kExitOk;
    }
    if (cmd_comm->parsed()) {
      write_output(
          qsg::element_to_json(s, qsg::commutator(s, load_element(s, elem_path),
                                                  load_element(s, elem_path2))),
          out_path);
      return kExitOk;
    }

    if (cmd_verify->parsed() || cmd_report->parsed()) {
      qsg::SuiteConfig cfg;
      cfg.window = window;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.symbol_grid = grid;

      std::vector<std::string> to_run = suites;
      if (cmd_report->parsed()) {
        to_run = qsg::suite_names();
        const bool zed = (s.kind() == qsg::Kind::lattice && s.rank() == 1) ||
                         s.kind() == qsg::Kind::numerical;
        if (!zed)
          to_run.erase(std::remove(to_run.begin(), to_run.end(), "quotient"),
                       to_run.end());
      }
      if (to_run.empty()) throw CliError{kExitUsage, "no suites selected"};

      std::vector<qsg::Report> reports;
      for (const std::string& name : to_run) {
        try {
          reports.push_back(qsg::run_suite(s, name, cfg));
        } catch (const qsg::Error& e) {
          throw CliError{kExitConfig,
                         "suite " + name + ": " + std::string(e.what())};
        }
      }

      qsg::Json out;
      if (reports.size() == 1) {
        out = qsg::report_to_json(reports.front());
      } else {
        qsg::Json arr = qsg::Json::array();
        for (const qsg::Report& r : reports)
          arr.push_back(qsg::report_to_json(r));
        out["reports"] = arr;
      }
      write_output(out, out_path);

      bool failed = false;
      for (const qsg::Report& r : reports) {
        failed = failed || !r.all_pass();
        const std::size_t wts = r.count(qsg::CaseStatus::window_too_small);
        if (wts > 0) {
          std::cerr << "warning: " << r.suite << ": " << wts
                    << " case(s) window_too_small\n";
          if (strict) failed = true;
        }
      }
      return failed ? kExitVerifyFailed : kExitOk;
    }

    throw CliError{kExitUsage, "no subcommand"};
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const qsg::InstanceMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
