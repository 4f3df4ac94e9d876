// Command-line front end: analyze an isolated quasi-homogeneous
// hypersurface singularity, test membership of meromorphic germs in the
// D-modules generated by powers of 1/f, and run report corpora.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "singlen/errors.hpp"
#include "singlen/report.hpp"

namespace {

using singlen::AnalysisRequest;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNonIsolated = 2;
constexpr int kExitNotQuasiHomogeneous = 3;
constexpr int kExitParse = 4;
constexpr int kExitOracleDisagreement = 5;

std::vector<std::string> split_vars(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int classify_error(const std::exception& e, std::string* kind) {
  if (dynamic_cast<const singlen::ParseError*>(&e)) {
    *kind = "ParseError";
    return kExitParse;
  }
  if (dynamic_cast<const singlen::NotQuasiHomogeneousError*>(&e)) {
    *kind = "NotQuasiHomogeneous";
    return kExitNotQuasiHomogeneous;
  }
  if (dynamic_cast<const singlen::OracleDisagreement*>(&e)) {
    *kind = "OracleDisagreement";
    return kExitOracleDisagreement;
  }
  if (dynamic_cast<const singlen::NonIsolatedError*>(&e)) {
    *kind = "NonIsolated";
    return kExitNonIsolated;
  }
  if (dynamic_cast<const singlen::MultipleOrNonIsolatedSingularities*>(&e)) {
    *kind = "MultipleOrNonIsolatedSingularities";
    return kExitNonIsolated;
  }
  if (dynamic_cast<const singlen::DomainError*>(&e)) {
    *kind = "DomainError";
    return kExitNonIsolated;
  }
  *kind = "InternalError";
  return 1;
}

int do_analyze(const AnalysisRequest& req) {
  try {
    singlen::Report r = singlen::run_analyze(req);
    std::cout << (req.format == "text" ? r.to_text() : r.to_json()) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::string kind;
    int code = classify_error(e, &kind);
    std::cerr << singlen::error_json(kind, e.what()) << "\n";
    return code;
  }
}

int do_membership(const AnalysisRequest& req, const std::string& element) {
  try {
    singlen::MembershipVerdict v = singlen::run_membership(req, element);
    if (v.was_auto_reduced)
      std::cout << "note: numerator had an f factor; element was auto-reduced\n";
    if (v.in_l) {
      std::cout << "in_L\n";
    } else if (v.min_power) {
      std::cout << "min_power_index " << *v.min_power << "\n";
      if (!v.witness.empty()) std::cout << "witness: " << v.witness << "\n";
    } else {
      std::cout << "not-in-tested-range\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::string kind;
    int code = classify_error(e, &kind);
    std::cerr << singlen::error_json(kind, e.what()) << "\n";
    return code;
  }
}

AnalysisRequest request_from_json(const nlohmann::json& j) {
  AnalysisRequest req;
  req.poly_text = j.at("poly").get<std::string>();
  req.variables = j.at("vars").get<std::vector<std::string>>();
  req.l_max = j.value("lmax", -1);
  req.run_oracle = j.value("oracle", true);
  req.pole_cap = j.value("pole_cap", 0);
  return req;
}

std::vector<AnalysisRequest> builtin_corpus() {
  std::vector<AnalysisRequest> out;
  auto add = [&out](const std::string& poly, std::vector<std::string> vars) {
    AnalysisRequest req;
    req.poly_text = poly;
    req.variables = std::move(vars);
    req.run_oracle = true;
    out.push_back(std::move(req));
  };
  add("x^3 + y^3 + z^3", {"x", "y", "z"});
  add("x^2 + y^3 + z^5", {"x", "y", "z"});
  add("x^2 + y^2 + z^3", {"x", "y", "z"});
  add("x^4 + y^4 + z^4", {"x", "y", "z"});
  add("x^5 + y^5 + z^5", {"x", "y", "z"});
  add("x^2 + y^3 + z^6", {"x", "y", "z"});
  add("x^2*y + y^3 + z^3", {"x", "y", "z"});
  add("x^2 + y^2 + z^2 + w^2", {"x", "y", "z", "w"});
  add("x^3 + y^3 + z^3 + w^3", {"x", "y", "z", "w"});
  return out;
}

int run_requests(const std::vector<std::pair<std::string, AnalysisRequest>>& entries) {
  bool any_oracle_fail = false;
  std::cout << "entry\tstatus\tmu\thprime\toracle\n";
  for (const auto& [name, req] : entries) {
    try {
      singlen::Report r = singlen::run_analyze(req);
      std::cout << name << "\tok\t" << r.mu << "\t" << r.hprime_dim << "\t"
                << (r.oracle ? (r.oracle->agrees ? "agrees" : "FAIL") : "skipped") << "\n";
    } catch (const std::exception& e) {
      std::string kind;
      int code = classify_error(e, &kind);
      if (code == kExitOracleDisagreement) any_oracle_fail = true;
      std::cout << name << "\t" << kind << "\t-\t-\t"
                << (code == kExitOracleDisagreement ? "FAIL" : "-") << "\n";
    }
  }
  return any_oracle_fail ? kExitOracleDisagreement : kExitOk;
}

int do_corpus(const std::string& dir, bool builtin) {
  std::vector<std::pair<std::string, AnalysisRequest>> entries;
  if (builtin) {
    for (auto& req : builtin_corpus()) entries.emplace_back(req.poly_text, req);
  } else {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      std::ifstream in(path);
      std::string line;
      std::size_t lineno = 0;
      std::string whole, first_nonempty;
      // Either one JSON object per file or one per line.
      std::vector<std::string> lines;
      while (std::getline(in, line)) {
        whole += line + "\n";
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
      }
      auto try_add = [&](const std::string& text, const std::string& label) {
        try {
          entries.emplace_back(label, request_from_json(nlohmann::json::parse(text)));
        } catch (const std::exception&) {
          std::cout << label << "\tInvalidRequest\t-\t-\t-\n";
        }
      };
      nlohmann::json parsed = nlohmann::json::parse(whole, nullptr, false);
      if (!parsed.is_discarded()) {
        try_add(whole, path.filename().string());
      } else {
        for (const auto& l : lines) {
          ++lineno;
          try_add(l, path.filename().string() + ":" + std::to_string(lineno));
        }
      }
    }
  }
  return run_requests(entries);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"D-module lengths of meromorphic functions along an isolated "
               "quasi-homogeneous hypersurface singularity"};
  app.require_subcommand(1);

  AnalysisRequest req;
  std::string vars_csv;
  std::string element;
  std::string corpus_dir;
  bool builtin = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--poly", req.poly_text, "polynomial f")->required();
    cmd->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    cmd->add_option("--lmax", req.l_max, "largest filtration index l (default n-2)");
    cmd->add_option("--pole-cap", req.pole_cap, "oracle pole cap override (default n)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full length/filtration report");
  add_common(analyze);
  analyze->add_option("--format", req.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--oracle", req.run_oracle, "cross-check with the linear-algebra oracle");

  CLI::App* membership = app.add_subcommand("membership", "membership test for h/f^k");
  add_common(membership);
  membership->add_option("--element", element, "element, e.g. \"x*y*z/f^2\"")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "run a directory of request files");
  corpus->add_option("dir", corpus_dir, "directory of JSON requests");
  corpus->add_flag("--builtin", builtin, "run the built-in corpus");

  CLI11_PARSE(app, argc, argv);

  req.variables = split_vars(vars_csv);

  if (analyze->parsed()) return do_analyze(req);
  if (membership->parsed()) return do_membership(req, element);
  if (corpus->parsed()) {
    if (!builtin && corpus_dir.empty()) {
      std::cerr << singlen::error_json("UsageError", "corpus requires a directory or --builtin")
                << "\n";
      return 1;
    }
    return do_corpus(corpus_dir, builtin);
  }
  return 0;
}
