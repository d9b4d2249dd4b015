#pragma once

#include <optional>
#include <vector>

#include "bax/torus.hpp"

namespace bax {

// Searches for coefficients a_k with exponents in the box [-D, D]^rank and
// constant (v-free) rational values such that sum_k a_k * gens[k] = 1
// exactly.  All gens must themselves have v-free coefficients.  The solve is
// deterministic (free variables pinned to zero) and the returned certificate
// is re-verified by multiplication before being handed back.
std::optional<std::vector<TorusFunction>> bezout_certificate(
    int rank, const std::vector<TorusFunction>& gens, int degree_bound);

}  // namespace bax
