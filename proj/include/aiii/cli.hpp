#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aiii/error.hpp"
#include "aiii/grs.hpp"
#include "aiii/oracle.hpp"
#include "aiii/orbit.hpp"
#include "aiii/poset.hpp"
#include "aiii/serialize.hpp"
#include "aiii/steinberg.hpp"
#include "aiii/verify.hpp"

namespace aiii::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kInvalid = 3 };

namespace detail {

inline Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw ValidationError("cannot parse partition '" + s + "'");
      }
    }
  }
  return Partition(std::move(parts));
}

inline int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::logic_error&) {
    throw ValidationError(std::string("environment variable ") + name + " is not an integer");
  }
}

// Reads "p q r" followed by (p+q)*r rational entries in row-major order.
inline std::tuple<RationalMatrix, int, int> read_matrix(std::istream& in) {
  int p = -1, q = -1, r = -1;
  if (!(in >> p >> q >> r) || p < 0 || q < 0 || r < 0) throw ValidationError("matrix file must start with 'p q r'");
  RationalMatrix m(static_cast<std::size_t>(p + q), static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string tok;
      if (!(in >> tok)) throw ValidationError("matrix file has fewer than (p+q)*r entries");
      m(i, j) = parse_rational(tok);
    }
  std::string extra;
  if (in >> extra) throw ValidationError("matrix file has more than (p+q)*r entries");
  return {m, p, q};
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open output file '" + path + "'");
  f << text;
}

}  // namespace detail

// Entry point of the aiii tool; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of a symmetric pair on a double flag variety: parameters, closure order, Steinberg maps"};
  app.require_subcommand(1);
  int size_bound = kDefaultEnumerationBound;
  app.add_option("--size-bound", size_bound, "Largest p or q accepted by enumerating commands")
      ->check(CLI::PositiveNumber);

  int p = 0, q = 0, r = 0;
  auto add_pqr = [&](CLI::App* sub) {
    sub->add_option("p", p, "Number of + vertices")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("q", q, "Number of - vertices")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("r", r, "Subspace dimension")->required()->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List all parameters with dimensions and invariants");
  add_pqr(enumerate);
  bool enumerate_json = false;
  enumerate->add_flag("--json", enumerate_json, "Emit JSON instead of text");

  auto* report = app.add_subcommand("report", "Everything computed for one parameter");
  std::string omega;
  report->add_option("omega", omega, "Parameter, e.g. 5x3x4:2-3,4-1:5:2")->required();
  bool report_text = false;
  report->add_flag("--text", report_text, "Emit text instead of JSON");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the closure order");
  add_pqr(hasse);
  bool dot = false;
  std::string output;
  hasse->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");
  hasse->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* fiber_cmd = app.add_subcommand("fiber", "Parameters over a pair of partitions");
  add_pqr(fiber_cmd);
  std::string lambda_s, mu_s;
  fiber_cmd->add_option("--lambda", lambda_s, "Partition of p, comma separated (empty for p = 0)")->required();
  fiber_cmd->add_option("--mu", mu_s, "Partition of q, comma separated (empty for q = 0)")->required();
  bool fiber_json = false;
  fiber_cmd->add_flag("--json", fiber_json, "Emit JSON instead of text");

  auto* count = app.add_subcommand("count", "Compare the counting formula with enumeration");
  add_pqr(count);

  auto* classify = app.add_subcommand("classify", "Parameter of the subspace spanned by matrix columns");
  std::string matrix_path;
  classify->add_option("--matrix", matrix_path, "File: header 'p q r' then (p+q)*r entries, row-major")
      ->required();
  bool classify_json = false;
  classify->add_flag("--json", classify_json, "Emit the full report as JSON");

  auto* verify = app.add_subcommand("verify", "Sweep every check over all parameters of (p, q, r)");
  add_pqr(verify);
  OracleOptions opt;
  std::optional<int> bound_flag, trials_flag;
  verify->add_option("--seed", opt.seed, "First random seed");
  verify->add_option("--bound", bound_flag, "Sample entries from [-bound, bound] (env AIII_BOUND)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials_flag, "Samples per parameter (env AIII_TRIALS)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (enumerate->parsed()) {
      const auto params = enumerate_parameters(p, q, r, size_bound);
      if (enumerate_json) {
        Json arr = Json::array();
        for (const auto& g : params) arr.push_back(report_json(g));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& g : params) {
          const DerivedData d = derived_data(g);
          out << g.to_string() << " dim=" << dimension(g) << " a+=" << d.a_plus << " a-=" << d.a_minus
              << " b=" << d.b << " c=" << d.c << "\n";
        }
      }
      return kOk;
    }
    if (report->parsed()) {
      const OrbitGraph g = OrbitGraph::parse(omega);
      const Json j = report_json(g);
      if (report_text) {
        for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return kOk;
    }
    if (hasse->parsed()) {
      const HasseDiagram h = hasse_diagram(p, q, r, size_bound);
      detail::write_output(dot ? emit_dot(h) : hasse_json(h).dump(2) + "\n", output, out);
      return kOk;
    }
    if (fiber_cmd->parsed()) {
      const KTypePair target{detail::parse_partition(lambda_s), detail::parse_partition(mu_s)};
      if (target.lambda.size() != p || target.mu.size() != q)
        throw ValidationError("--lambda must partition p and --mu must partition q");
      const auto params = fiber(p, q, r, target, size_bound);
      const std::uint64_t formula = fiber_cardinality(target.lambda, target.mu, r);
      if (fiber_json) {
        Json arr = Json::array();
        for (const auto& g : params) arr.push_back(g.to_string());
        out << Json{{"lambda", target.lambda}, {"mu", target.mu}, {"r", r}, {"formula", formula}, {"fiber", arr}}.dump(2)
            << "\n";
      } else {
        for (const auto& g : params) out << g.to_string() << "\n";
        out << "size=" << params.size() << " formula=" << formula << "\n";
      }
      return params.size() == formula ? kOk : kMismatch;
    }
    if (count->parsed()) {
      const BigInt formula = count_parameters(p, q, r);
      const auto enumerated = enumerate_parameters(p, q, r, size_bound).size();
      const bool same = formula == BigInt(enumerated);
      out << "formula=" << formula.str() << " enumerated=" << enumerated << (same ? " OK" : " MISMATCH") << "\n";
      return same ? kOk : kMismatch;
    }
    if (classify->parsed()) {
      std::ifstream f(matrix_path);
      if (!f) throw ValidationError("cannot open matrix file '" + matrix_path + "'");
      const auto [m, mp, mq] = detail::read_matrix(f);
      const OrbitGraph g = classify_subspace(m, mp, mq);
      out << (classify_json ? report_json(g).dump(2) : g.to_string()) << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      opt.bound = bound_flag ? *bound_flag : detail::env_int("AIII_BOUND", kDefaultSampleBound);
      opt.trials = trials_flag ? *trials_flag : detail::env_int("AIII_TRIALS", kDefaultTrials);
      if (opt.bound < 1 || opt.trials < 1) throw ValidationError("bound and trials must be positive");
      const VerifyReport rep = verify_sweep(p, q, r, opt, size_bound);
      for (const auto& [check, n] : rep.cases) {
        const auto it = rep.failures.find(check);
        if (it == rep.failures.end()) {
          out << check << ": OK (" << n << ")\n";
        } else {
          out << check << ": FAIL (" << it->second.size() << " of " << n << ")\n";
          for (const auto& msg : it->second) out << "  " << msg << "\n";
        }
      }
      return rep.ok() ? kOk : kMismatch;
    }
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace aiii::cli
