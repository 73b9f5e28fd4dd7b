// Command-line front end: generate basis sets, verify their defining
// properties, analyze entanglement under a cut, and export documents.
//
// Exit codes: 0 success / checks passed, 1 a requested check failed,
// 2 usage or document-format error, 3 unsupported dimension.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "mub/construct.hpp"
#include "mub/document_io.hpp"
#include "mub/entanglement.hpp"
#include "mub/errors.hpp"
#include "mub/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct GenerateOptions {
  std::string method;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> theta;
  std::optional<int> dim_a;
  std::optional<int> dim_b;
  std::optional<int> subsystems;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_generate(const GenerateOptions& opt) {
  mub::Provenance spec;
  spec.method = opt.method;
  spec.p = opt.p;
  spec.theta = opt.theta;
  spec.dim_a = opt.dim_a;
  spec.dim_b = opt.dim_b;
  spec.subsystems = opt.subsystems;
  spec.seed = opt.seed;
  mub::MubSet set = mub::construct_set(spec);
  if (opt.out.empty()) {
    std::cout << mub::to_json(set);
  } else {
    mub::write_document(set, opt.out);
    std::cout << "wrote " << set.bases.size() << " bases (dim " << set.dim
              << ") to " << opt.out << "\n";
  }
  return kExitPass;
}

void print_pair_failure(const mub::PairWitness& w, const mub::MubSet& set) {
  if (w.state_1 < 0) {
    std::cout << "  basis " << set.bases[w.basis_1].label
              << " is not orthonormal (residual " << w.value << ")\n";
    return;
  }
  std::cout << "  witness: |<" << set.bases[w.basis_1].label << ":" << w.state_1
            << "|" << set.bases[w.basis_2].label << ":" << w.state_2
            << ">|^2 = " << w.value << "\n";
}

int run_verify(const std::string& in, double tol, bool want_design,
               bool want_complete, bool as_json) {
  mub::MubSet set = mub::read_document(in);
  mub::VerificationReport report = mub::check_mub_set(set, tol);
  bool pass = report.pass();
  std::optional<mub::DesignReport> design;
  if (want_design) {
    design = mub::check_2design(set, tol);
    pass = pass && design->is_design;
  }
  if (want_complete) pass = pass && report.complete;

  if (as_json) {
    nlohmann::json j;
    j["orthonormal"] = report.orthonormal;
    j["unbiased"] = report.unbiased;
    j["complete"] = report.complete;
    j["max_orthonormality_residual"] = report.max_orthonormality_residual;
    j["max_unbiased_deviation"] = report.max_unbiased_deviation;
    if (design) {
      j["frame_potential"] = design->frame_potential;
      j["design_reference"] = design->reference;
      j["design_pass"] = design->is_design;
    }
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "bases: " << set.bases.size() << " (dim " << set.dim << ", "
              << (report.complete ? "complete" : "incomplete") << ")\n";
    std::cout << "orthonormality residual: "
              << report.max_orthonormality_residual << "\n";
    std::cout << "max ||overlap|^2 - 1/d|: " << report.max_unbiased_deviation
              << " (tol " << tol << ")\n";
    if (design)
      std::cout << "frame potential: " << design->frame_potential
                << " (2-design reference " << design->reference << ", "
                << (design->is_design ? "pass" : "FAIL") << ")\n";
    if (report.failure) print_pair_failure(*report.failure, set);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

int run_analyze(const std::string& in, const std::string& split_text,
                const std::string& out) {
  mub::MubSet set = mub::read_document(in);
  int da = 0, db = 0;
  if (std::sscanf(split_text.c_str(), "%dx%d", &da, &db) != 2 || da < 1 ||
      db < 1)
    throw std::invalid_argument("--split must look like 2x3");
  if (da * db != set.dim)
    throw std::invalid_argument("split " + split_text +
                                " does not factor dimension " +
                                std::to_string(set.dim));
  mub::Bipartition split(da, db);
  double total = mub::entanglement_sum(set, split);
  double reference = mub::conservation_reference(split);
  std::cout << "entanglement total " << total << " vs reference " << reference
            << " (" << (set.complete() ? "complete set" : "incomplete set")
            << ", |diff| = " << std::abs(total - reference) << ")\n";
  std::string doc = mub::analysis_to_json(set, split);
  if (out.empty())
    std::cout << doc;
  else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << doc;
  }
  return kExitPass;
}

int run_export(const std::string& in, const std::string& format,
               const std::string& out) {
  mub::MubSet set = mub::read_document(in);
  std::string text;
  if (format == "json")
    text = mub::to_json(set);
  else if (format == "text")
    text = mub::render_text(set);
  else if (format == "latex")
    text = mub::render_latex(set);
  else
    throw std::invalid_argument("unknown format: " + format);
  if (out.empty())
    std::cout << text;
  else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutually unbiased bases toolkit"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "construct a basis set");
  generate
      ->add_option("--method", gen.method,
                   "prime | prime-squared | two-qubit | three-qubit | "
                   "wocjan-beth | product | blocking-pair")
      ->required();
  generate->add_option("--p", gen.p, "prime parameter");
  generate->add_option("--theta", gen.theta,
                       "override theta for prime-squared");
  generate->add_option("--dA", gen.dim_a, "first factor (product method)");
  generate->add_option("--dB", gen.dim_b, "second factor (product method)");
  generate->add_option("--r", gen.subsystems,
                       "subsystem count (blocking-pair), default 2");
  generate->add_option("--seed", gen.seed, "recorded in provenance");
  generate->add_option("--out", gen.out, "output path (stdout if omitted)");

  std::string verify_in;
  double tol = mub::kDefaultCheckTol;
  bool want_design = false, want_complete = false, as_json = false;
  auto* verify = app.add_subcommand("verify", "check a basis set document");
  verify->add_option("input", verify_in, "document path")->required();
  verify->add_option("--tol", tol, "unbiasedness tolerance");
  verify->add_flag("--design", want_design, "also require the 2-design test");
  verify->add_flag("--complete", want_complete, "require d+1 bases");
  verify->add_flag("--json", as_json, "emit a JSON report");

  std::string analyze_in, split_text, analyze_out;
  auto* analyze = app.add_subcommand("analyze", "entanglement analysis");
  analyze->add_option("input", analyze_in, "document path")->required();
  analyze->add_option("--split", split_text, "bipartition, e.g. 3x3")
      ->required();
  analyze->add_option("--out", analyze_out, "analysis output path");

  std::string export_in, format = "text", export_out;
  auto* do_export = app.add_subcommand("export", "render a document");
  do_export->add_option("input", export_in, "document path")->required();
  do_export->add_option("--format", format, "json | text | latex");
  do_export->add_option("--out", export_out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*verify)
      return run_verify(verify_in, tol, want_design, want_complete, as_json);
    if (*analyze) return run_analyze(analyze_in, split_text, analyze_out);
    if (*do_export) return run_export(export_in, format, export_out);
  } catch (const mub::UnsupportedDimension& e) {
    std::cerr << "unsupported dimension: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "document error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
