#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "matchroid/campaigns.hpp"
#include "matchroid/io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUnmatched = 1;  // also: campaign failures
constexpr int kExitUsage = 2;

// Inputs are inline JSON when they look like it, file paths otherwise;
// "-" reads stdin.
std::string slurp(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) matchroid::raise(matchroid::ErrorKind::Parse, "cannot open input: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) matchroid::raise(matchroid::ErrorKind::Parse, "malformed JSON input");
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) matchroid::raise(matchroid::ErrorKind::Parse, "cannot open output: " + out_path);
  out << text << "\n";
}

std::string element_str(const matchroid::GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

std::string basis_str(const matchroid::Matroid& m, matchroid::BasisMask mask) {
  std::string s = "{";
  bool first = true;
  for (auto i : matchroid::mask_to_indices(mask)) {
    if (!first) s += ", ";
    first = false;
    s += element_str(m.ground()[i]);
  }
  return s + "}";
}

void print_summary(const matchroid::Matroid& m) {
  std::cerr << "rank " << m.rank() << ", ground " << m.ground_size() << " elements, "
            << m.bases().size() << " bases\n";
}

int cmd_construct(const std::string& input, const std::string& out_path,
                  const std::string& format) {
  matchroid::Matroid m = matchroid::matroid_from_json(parse_json(slurp(input)));
  if (format == "table") {
    std::ostringstream ss;
    ss << "rank: " << m.rank() << "\nground:";
    for (const auto& x : m.ground()) ss << " " << element_str(x);
    ss << "\nbases: " << m.bases().size() << "\n";
    for (matchroid::BasisMask b : m.bases()) ss << "  " << basis_str(m, b) << "\n";
    std::string s = ss.str();
    s.pop_back();
    emit(out_path, s);
  } else {
    emit(out_path, matchroid::matroid_to_json(m).dump(2));
  }
  print_summary(m);
  return kExitOk;
}

int cmd_bases(const std::string& input, const std::string& out_path, const std::string& format) {
  matchroid::Matroid m = matchroid::matroid_from_json(parse_json(slurp(input)));
  if (format == "table") {
    std::ostringstream ss;
    for (matchroid::BasisMask b : m.bases()) ss << basis_str(m, b) << "\n";
    std::string s = ss.str();
    if (!s.empty()) s.pop_back();
    emit(out_path, s);
  } else {
    json bases = json::array();
    for (matchroid::BasisMask b : m.bases()) {
      json basis = json::array();
      for (auto i : matchroid::mask_to_indices(b)) {
        basis.push_back(matchroid::element_to_json(m.ground()[i]));
      }
      bases.push_back(std::move(basis));
    }
    emit(out_path, json{{"rank", m.rank()}, {"bases", std::move(bases)}}.dump(2));
  }
  print_summary(m);
  return kExitOk;
}

int cmd_match(const std::string& m_input, const std::string& n_input,
              const std::string& out_path, const std::string& format,
              const std::string& engine_name) {
  matchroid::Matroid m = matchroid::matroid_from_json(parse_json(slurp(m_input)));
  matchroid::Matroid n = matchroid::matroid_from_json(parse_json(slurp(n_input)));
  matchroid::MatchOptions options;
  if (engine_name == "brute") options.engine = matchroid::MatchEngine::BruteForce;
  if (engine_name == "intersection") options.engine = matchroid::MatchEngine::Intersection;
  matchroid::MatchReport report = matchroid::matroid_matched(m, n, options);
  if (format == "table") {
    std::ostringstream ss;
    ss << (report.matched ? "matched" : "not matched") << "\n";
    if (report.counterexample) {
      ss << "counterexample basis: " << basis_str(m, *report.counterexample);
    } else {
      ss << report.per_basis.size() << " bases witnessed";
    }
    emit(out_path, ss.str());
  } else {
    emit(out_path, matchroid::report_to_json(report).dump(2));
  }
  return report.matched ? kExitOk : kExitUnmatched;
}

int cmd_verify(const std::string& id, const matchroid::CampaignOptions& options,
               const std::string& out_path, const std::string& format) {
  matchroid::CampaignResult result = matchroid::run_campaign(id, options);
  if (format == "table") {
    std::ostringstream ss;
    ss << "campaign " << result.campaign << ": " << result.instances << " instances, "
       << result.failures.size() << " failures [" << (result.passed() ? "PASS" : "FAIL") << "] ("
       << result.elapsed_ms << " ms)";
    for (const auto& note : result.notes) ss << "\nnote: " << note;
    for (const auto& f : result.failures) ss << "\nfailure: " << f.dump();
    emit(out_path, ss.str());
  } else {
    emit(out_path, matchroid::result_to_json(result).dump(2));
  }
  return result.passed() ? kExitOk : kExitUnmatched;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroids over abelian groups: construction, matchability, verification"};
  app.require_subcommand(1);

  std::string input, m_input, n_input, out_path;
  std::string format = "json";
  std::string engine = "auto";
  std::string campaign;
  matchroid::CampaignOptions options;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* construct = app.add_subcommand("construct", "build and validate a matroid");
  construct->add_option("--spec,--in,input", input, "constructor JSON, file path, or -")
      ->required();
  add_format(construct);

  CLI::App* bases = app.add_subcommand("bases", "list the bases of a matroid");
  bases->add_option("--spec,--in,input", input, "matroid JSON, file path, or -")->required();
  add_format(bases);

  CLI::App* match = app.add_subcommand("match", "decide whether M is matched to N");
  match->add_option("--m,m", m_input, "source matroid (JSON or file)")->required();
  match->add_option("--n,n", n_input, "target matroid (JSON or file)")->required();
  match->add_option("--engine", engine, "matching engine")
      ->check(CLI::IsMember({"auto", "brute", "intersection"}));
  add_format(match);

  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", campaign, "campaign id")->required();
  verify->add_option("--seed", options.seed, "RNG seed (default 0)");
  verify->add_option("--trials", options.trials, "sampled instances");
  verify->add_option("--max-m", options.max_m, "sweep bound on m");
  verify->add_option("--mod", options.modulus, "cyclic universe Z/mod (losonczy)");
  verify->add_option("--window", options.window, "integer universe {-w..w} (losonczy)");
  verify->add_option("--prime", options.prime, "prime for small-sets / paving-general");
  verify->add_option("--max-size", options.max_size, "subset size cap (losonczy)");
  add_format(verify);

  CLI::App* examples = app.add_subcommand("examples", "reproduce the worked examples");
  add_format(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(input, out_path, format);
    if (bases->parsed()) return cmd_bases(input, out_path, format);
    if (match->parsed()) return cmd_match(m_input, n_input, out_path, format, engine);
    if (verify->parsed()) return cmd_verify(campaign, options, out_path, format);
    if (examples->parsed()) return cmd_verify("examples", options, out_path, format);
  } catch (const matchroid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
