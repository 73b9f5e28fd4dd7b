#include "mub/construct.hpp"

#include <stdexcept>

#include "mub/composite_mubs.hpp"
#include "mub/errors.hpp"
#include "mub/prime_mubs.hpp"
#include "mub/product_structure.hpp"
#include "mub/wocjan_beth.hpp"

namespace mub {

namespace {

std::int64_t require_prime(std::optional<std::int64_t> p, const char* method) {
  if (!p) throw std::invalid_argument(std::string(method) + " needs --p");
  if (!is_prime(*p))
    throw UnsupportedDimension(std::string(method) + " needs a prime p, got " +
                               std::to_string(*p));
  return *p;
}

}  // namespace

MubSet construct_set(const Provenance& spec) {
  const std::string& method = spec.method;
  if (method == "prime") {
    MubSet set = complete_prime_set(require_prime(spec.p, "prime"));
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "prime-squared") {
    std::int64_t p = require_prime(spec.p, "prime-squared");
    if (p == 2)
      throw UnsupportedDimension("use method two-qubit for p = 2");
    MubSet set = two_qudit_complete_set(p, spec.theta);
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "two-qubit") {
    MubSet set = two_qubit_complete_set();
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "three-qubit") {
    MubSet set = three_qubit_set();
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "wocjan-beth") {
    MubSet set = wocjan_beth_mubs(require_prime(spec.p, "wocjan-beth"));
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "product") {
    if (!spec.dim_a || !spec.dim_b)
      throw std::invalid_argument("product needs --dA and --dB");
    if (!is_prime(*spec.dim_a) || !is_prime(*spec.dim_b))
      throw UnsupportedDimension("product needs prime subsystem dimensions");
    MubSet set = product_mub_set(*spec.dim_a, *spec.dim_b);
    set.provenance.seed = spec.seed;
    return set;
  }
  if (method == "blocking-pair") {
    std::int64_t p = require_prime(spec.p, "blocking-pair");
    int r = spec.subsystems.value_or(2);
    auto [standard, chained] = blocking_pair(p, r);
    MubSet set;
    set.dim = standard.dim();
    set.provenance.method = "blocking-pair";
    set.provenance.p = p;
    set.provenance.subsystems = r;
    set.provenance.seed = spec.seed;
    set.bases.push_back(std::move(standard));
    set.bases.push_back(std::move(chained));
    return set;
  }
  throw std::invalid_argument("unknown method: " + method);
}

}  // namespace mub
