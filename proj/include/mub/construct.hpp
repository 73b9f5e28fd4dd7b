#pragma once

#include "mub/matrix_core.hpp"

namespace mub {

/// Builds the set described by a provenance record. Method names match the
/// CLI: prime, prime-squared, two-qubit, three-qubit, wocjan-beth, product,
/// blocking-pair. Throws UnsupportedDimension when the parameters name a
/// dimension the method cannot produce (e.g. non-prime p) and
/// std::invalid_argument for malformed parameters.
MubSet construct_set(const Provenance& spec);

}  // namespace mub
