#include "mub/wocjan_beth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mub/errors.hpp"

namespace mub {

int support_intersection(const IncidentVector& a, const IncidentVector& b) {
  int count = 0;
  auto it = b.support.begin();
  for (int s : a.support) {
    it = std::lower_bound(it, b.support.end(), s);
    if (it != b.support.end() && *it == s) ++count;
  }
  return count;
}

bool family_valid(const IncidentFamily& f) {
  const int d = f.dim;
  if (static_cast<int>(f.members.size()) != d) return false;
  std::vector<char> seen(static_cast<std::size_t>(d) * d, 0);
  for (const auto& v : f.members) {
    if (v.dim != d || static_cast<int>(v.support.size()) != d) return false;
    for (int s : v.support) {
      if (s < 0 || s >= d * d || seen[s]) return false;
      seen[s] = 1;
    }
  }
  return true;
}

bool families_compatible(const IncidentFamily& f, const IncidentFamily& g) {
  for (const auto& a : f.members)
    for (const auto& b : g.members)
      if (support_intersection(a, b) != 1) return false;
  return true;
}

std::array<IncidentFamily, 2> natural_families(int d) {
  if (d < 2) throw std::invalid_argument("need d >= 2");
  IncidentFamily rows{d, {}}, cols{d, {}};
  for (int i = 0; i < d; ++i) {
    IncidentVector r{d, {}}, c{d, {}};
    for (int j = 0; j < d; ++j) {
      r.support.push_back(i * d + j);
      c.support.push_back(j * d + i);
    }
    rows.members.push_back(std::move(r));
    cols.members.push_back(std::move(c));
  }
  return {std::move(rows), std::move(cols)};
}

std::vector<IncidentFamily> mols_families(std::int64_t d) {
  if (!is_prime(d))
    throw UnsupportedDimension(
        "Latin-square families are generated for prime d only");
  const int n = static_cast<int>(d);
  std::vector<IncidentFamily> out;
  for (int k = 1; k < n; ++k) {
    IncidentFamily fam{n, {}};
    for (int v = 0; v < n; ++v) {
      IncidentVector vec{n, {}};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((i + k * j) % n == v) vec.support.push_back(i * n + j);
      std::sort(vec.support.begin(), vec.support.end());
      fam.members.push_back(std::move(vec));
    }
    out.push_back(std::move(fam));
  }
  return out;
}

Vector lift(const Vector& phases, const IncidentVector& v) {
  const int d = v.dim;
  if (phases.size() != d) throw std::invalid_argument("phase length != d");
  for (int t = 0; t < d; ++t)
    if (std::abs(std::abs(phases(t)) - 1.0) > 1e-12)
      throw std::invalid_argument("phase entries must have modulus 1");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int t = 0; t < d; ++t) out(v.support[t]) = phases(t) * norm;
  return out;
}

MubSet wocjan_beth_mubs(std::int64_t d,
                        const std::optional<std::vector<Vector>>& phases) {
  std::vector<Vector> h;
  if (phases) {
    h = *phases;
    if (static_cast<std::int64_t>(h.size()) != d)
      throw std::invalid_argument("need d phase vectors");
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        if (std::abs(h[i].dot(h[j])) > 1e-9)
          throw std::invalid_argument("phase vectors must be orthogonal");
  } else {
    for (std::int64_t j = 0; j < d; ++j) {  // rows of the Fourier matrix
      Vector v(d);
      for (std::int64_t t = 0; t < d; ++t) v(t) = root_value(d, j * t);
      h.push_back(std::move(v));
    }
  }

  std::vector<IncidentFamily> families;
  auto nat = natural_families(static_cast<int>(d));
  families.push_back(std::move(nat[0]));
  families.push_back(std::move(nat[1]));
  for (auto& f : mols_families(d)) families.push_back(std::move(f));

  MubSet set;
  set.dim = static_cast<int>(d * d);
  set.provenance.method = "wocjan-beth";
  set.provenance.p = d;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    Matrix m(set.dim, set.dim);
    int col = 0;
    for (const auto& v : families[fi].members)
      for (std::int64_t j = 0; j < d; ++j) m.col(col++) = lift(h[j], v);
    const char* name = fi == 0 ? "rows" : fi == 1 ? "cols" : nullptr;
    std::string label =
        name ? name : "latin" + std::to_string(fi - 1);
    set.bases.push_back(Basis::from_matrix(std::move(label), std::move(m)));
  }
  return set;
}

}  // namespace mub
