#include "mub/entanglement.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mub {

Bipartition::Bipartition(int da, int db) : dim_a(da), dim_b(db) {
  if (da < 1 || db < 1) throw std::invalid_argument("subsystem dims must be >= 1");
}

Bipartition::Bipartition(int da, int db, std::vector<int> pos)
    : dim_a(da), dim_b(db), position(std::move(pos)) {
  if (da < 1 || db < 1) throw std::invalid_argument("subsystem dims must be >= 1");
  if (static_cast<int>(position.size()) != dim())
    throw std::invalid_argument("embedding size must equal the dimension");
  std::vector<char> seen(position.size(), 0);
  for (int p : position) {
    if (p < 0 || p >= dim() || seen[p])
      throw std::invalid_argument("embedding must be a bijection");
    seen[p] = 1;
  }
}

Bipartition Bipartition::factor_cut(const std::vector<int>& dims, int which) {
  const int n = static_cast<int>(dims.size());
  if (which < 0 || which >= n) throw std::invalid_argument("bad factor index");
  int total = 1;
  for (int d : dims) total *= d;
  const int da = dims[which];
  const int db = total / da;
  std::vector<int> pos(total);
  for (int g = 0; g < total; ++g) {
    // unpack g into factor digits, row-major
    std::vector<int> digit(n);
    int rest = g;
    for (int f = n - 1; f >= 0; --f) {
      digit[f] = rest % dims[f];
      rest /= dims[f];
    }
    int b = 0;
    for (int f = 0; f < n; ++f)
      if (f != which) b = b * dims[f] + digit[f];
    pos[g] = digit[which] * db + b;
  }
  return Bipartition(da, db, std::move(pos));
}

double reduced_purity(const Vector& state, const Bipartition& split) {
  if (state.size() != split.dim())
    throw std::invalid_argument("state dimension does not match the cut");
  if (std::abs(state.squaredNorm() - 1.0) > 1e-8)
    throw std::invalid_argument("state must be normalized");
  Matrix c(split.dim_a, split.dim_b);
  if (split.position.empty()) {
    c = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>(
        state.data(), split.dim_a, split.dim_b);
  } else {
    for (int g = 0; g < split.dim(); ++g) {
      int p = split.position[g];
      c(p / split.dim_b, p % split.dim_b) = state(g);
    }
  }
  Matrix rho = c * c.adjoint();
  // Tr(rho^2) = ||rho||_F^2 since rho is Hermitian
  return rho.squaredNorm();
}

double entanglement_sum(const MubSet& set, const Bipartition& split) {
  if (set.bases.empty()) throw std::invalid_argument("empty set");
  double total = 0.0;
  for (const auto& b : set.bases)
    for (int j = 0; j < b.dim(); ++j)
      total += reduced_purity(b.column(j), split);
  return total;
}

double conservation_reference(const Bipartition& split) {
  return static_cast<double>(split.dim_a) * split.dim_b *
         (split.dim_a + split.dim_b);
}

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::kProduct: return "product";
    case StateClass::kPartial: return "partial";
    case StateClass::kMaximal: return "maximal";
  }
  return "?";
}

std::string to_string(BasisClass c) {
  switch (c) {
    case BasisClass::kProduct: return "product";
    case BasisClass::kMaximal: return "maximal";
    case BasisClass::kMixed: return "mixed";
  }
  return "?";
}

int EntanglementProfile::count(BasisClass c) const {
  int n = 0;
  for (const auto& b : bases) n += (b.verdict == c) ? 1 : 0;
  return n;
}

bool EntanglementProfile::product_rest_maximal() const {
  for (const auto& b : bases)
    if (b.verdict == BasisClass::kMixed) return false;
  return count(BasisClass::kProduct) ==
         std::min(split.dim_a, split.dim_b) + 1;
}

EntanglementProfile classify_set(const MubSet& set, const Bipartition& split,
                                 double eps) {
  if (set.dim != split.dim())
    throw std::invalid_argument("cut does not match the set dimension");
  EntanglementProfile profile;
  profile.split = split;
  const double floor = 1.0 / std::min(split.dim_a, split.dim_b);
  for (const auto& b : set.bases) {
    BasisProfile bp;
    bp.label = b.label;
    bool all_product = true, all_maximal = true;
    for (int j = 0; j < b.dim(); ++j) {
      double purity = reduced_purity(b.column(j), split);
      bp.purities.push_back(purity);
      bp.purity_sum += purity;
      StateClass cls = StateClass::kPartial;
      if (purity >= 1.0 - eps) cls = StateClass::kProduct;
      else if (purity <= floor + eps) cls = StateClass::kMaximal;
      bp.state_classes.push_back(cls);
      all_product &= cls == StateClass::kProduct;
      all_maximal &= cls == StateClass::kMaximal;
    }
    bp.verdict = all_product ? BasisClass::kProduct
                 : all_maximal ? BasisClass::kMaximal
                               : BasisClass::kMixed;
    profile.total += bp.purity_sum;
    profile.bases.push_back(std::move(bp));
  }
  return profile;
}

HaarEstimate haar_average_purity(const Bipartition& split,
                                 std::int64_t samples, std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("need at least 100 samples");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = split.dim();
  double sum = 0.0, sum_sq = 0.0;
  Vector state(d);
  for (std::int64_t i = 0; i < samples; ++i) {
    for (int j = 0; j < d; ++j) state(j) = Complex(gauss(rng), gauss(rng));
    state /= state.norm();
    double purity = reduced_purity(state, split);
    sum += purity;
    sum_sq += purity * purity;
  }
  HaarEstimate est;
  est.samples = samples;
  est.mean = sum / static_cast<double>(samples);
  double var = (sum_sq - sum * sum / static_cast<double>(samples)) /
               static_cast<double>(samples - 1);
  est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  return est;
}

double lubkin_average(const Bipartition& split) {
  return static_cast<double>(split.dim_a + split.dim_b) /
         static_cast<double>(split.dim() + 1);
}

}  // namespace mub
