#include "mub/verification.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mub/construct.hpp"
#include "mub/document_io.hpp"
#include "mub/entanglement.hpp"

namespace mub {

namespace {

// Neumaier-compensated accumulator. The d = 49 sweep sums ~6e6 terms of
// size 1/d^2; naive summation error would reach the 1e-9 verdict tolerance.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

PairReport check_unbiased_pair(const Basis& b1, const Basis& b2, double tol) {
  if (b1.dim() != b2.dim())
    throw std::invalid_argument("bases of different dimension");
  const int d = b1.dim();
  const double target = 1.0 / d;
  Matrix gram = b1.matrix.adjoint() * b2.matrix;
  PairReport report;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double dev = std::abs(std::norm(gram(i, j)) - target);
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst = {0, 0, i, j, std::norm(gram(i, j))};
      }
    }
  report.unbiased = report.max_deviation < tol;
  return report;
}

VerificationReport check_mub_set(const MubSet& set, double tol) {
  VerificationReport report;
  report.orthonormal = true;
  report.unbiased = true;
  report.complete = set.complete();
  for (std::size_t i = 0; i < set.bases.size(); ++i) {
    double residual = unitarity_residual(set.bases[i].matrix);
    report.max_orthonormality_residual =
        std::max(report.max_orthonormality_residual, residual);
    if (residual >= kUnitaryTol) {
      report.orthonormal = false;
      if (!report.failure)
        report.failure = PairWitness{i, i, -1, -1, residual};
    }
  }
  for (std::size_t i = 0; i < set.bases.size(); ++i)
    for (std::size_t j = i + 1; j < set.bases.size(); ++j) {
      PairReport pair = check_unbiased_pair(set.bases[i], set.bases[j], tol);
      pair.worst.basis_1 = i;
      pair.worst.basis_2 = j;
      report.max_unbiased_deviation =
          std::max(report.max_unbiased_deviation, pair.max_deviation);
      if (!pair.unbiased) {
        report.unbiased = false;
        if (!report.failure) report.failure = pair.worst;
      }
      report.pairs.push_back(std::move(pair));
    }
  return report;
}

DesignReport check_2design(const MubSet& set, double tol) {
  const int d = set.dim;
  const auto n_bases = set.bases.size();
  const double n_states = static_cast<double>(n_bases) * d;
  CompensatedSum fp;
  for (std::size_t i = 0; i < n_bases; ++i)
    for (std::size_t j = 0; j < n_bases; ++j) {
      Matrix gram = set.bases[i].matrix.adjoint() * set.bases[j].matrix;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          double o = std::norm(gram(a, b));
          fp.add(o * o);
        }
    }
  DesignReport report;
  report.frame_potential = fp.value();
  report.reference = n_states * n_states * 2.0 / (d * (d + 1.0));
  report.deviation = report.frame_potential - report.reference;
  report.is_design = std::abs(report.deviation) < tol;
  return report;
}

double second_moment_distance(const MubSet& set) {
  const int d = set.dim;
  const int dd = d * d;
  Matrix moment = Matrix::Zero(dd, dd);
  double n_states = 0.0;
  for (const auto& basis : set.bases)
    for (int j = 0; j < d; ++j) {
      Vector psi = basis.column(j);
      Matrix proj = psi * psi.adjoint();
      moment += tensor(proj, proj);
      n_states += 1.0;
    }
  moment /= n_states;
  Matrix sym = Matrix::Zero(dd, dd);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      sym(a * d + b, a * d + b) += 0.5;
      sym(a * d + b, b * d + a) += 0.5;  // (I + SWAP) / 2
    }
  Matrix diff = moment - sym * (2.0 / (d * (d + 1.0)));
  return std::sqrt(diff.squaredNorm());
}

namespace {

FixtureOutcome check_exact_fixture(const std::filesystem::path& file) {
  MubSet reference = read_document(file);
  MubSet constructed = construct_set(reference.provenance);
  if (constructed.bases.size() != reference.bases.size())
    return {file.filename().string(), "fail", "basis count differs"};
  for (std::size_t i = 0; i < reference.bases.size(); ++i) {
    const Basis& ref = reference.bases[i];
    const Basis& got = constructed.bases[i];
    if (ref.label != got.label)
      return {file.filename().string(), "fail",
              "label mismatch at index " + std::to_string(i) + ": " +
                  ref.label + " vs " + got.label};
    if (!ref.exact || !got.exact)
      return {file.filename().string(), "fail",
              "missing exact grid for " + ref.label};
    if (!ref.exact->same_entries(*got.exact))
      return {file.filename().string(), "fail",
              "entry mismatch in basis " + ref.label};
  }
  return {file.filename().string(), "match", ""};
}

FixtureOutcome check_three_qubit_properties() {
  Provenance spec;
  spec.method = "three-qubit";
  MubSet set = construct_set(spec);
  VerificationReport report = check_mub_set(set, 1e-10);
  if (!report.pass() || !report.complete)
    return {"(three-qubit)", "fail", "set fails verification"};
  for (int qubit = 0; qubit < 3; ++qubit) {
    auto cut = Bipartition::factor_cut({2, 2, 2}, qubit);
    EntanglementProfile profile = classify_set(set, cut);
    if (profile.count(BasisClass::kProduct) != 3 ||
        profile.count(BasisClass::kMaximal) != 6)
      return {"(three-qubit)", "fail",
              "entanglement pattern broken on cut " + std::to_string(qubit)};
  }
  return {"(three-qubit)", "properties-pass",
          "unbiased at 1e-10; 3 product + 6 maximal on every cut"};
}

}  // namespace

FixtureReport run_fixture_suite(const std::filesystem::path& fixture_dir) {
  FixtureReport report;
  auto manifest_path = fixture_dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) {
    report.outcomes.push_back(
        {"manifest.json", "skip", "manifest not found in " + fixture_dir.string()});
    report.all_passed = false;
    return report;
  }
  nlohmann::json manifest = nlohmann::json::parse(in);
  for (const auto& entry : manifest.at("fixtures")) {
    const std::string check = entry.at("check");
    if (check == "properties") {
      report.outcomes.push_back(check_three_qubit_properties());
    } else {
      const std::string file = entry.at("file");
      auto path = fixture_dir / file;
      if (!std::filesystem::exists(path)) {
        report.outcomes.push_back({file, "skip", "fixture file missing"});
        continue;
      }
      report.outcomes.push_back(check_exact_fixture(path));
    }
    const auto& last = report.outcomes.back();
    if (last.status == "fail" || last.status == "skip")
      report.all_passed = false;
  }
  return report;
}

}  // namespace mub
