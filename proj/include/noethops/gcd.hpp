#pragma once

#include <optional>

#include "noethops/polynomial.hpp"

namespace noethops {

// Quotient of f by g when g divides f exactly, nullopt otherwise.
std::optional<QPoly> exact_divide(const QPoly& f, const QPoly& g);

// Scale so the grevlex lead coefficient is 1.
QPoly make_monic(const QPoly& f);

// Greatest common divisor over QQ, monic under grevlex; gcd(0, b) is
// normalized b.  Recursive content/primitive-part reduction over a
// univariate pseudo-remainder sequence.
QPoly multivariate_gcd(const QPoly& a, const QPoly& b);

QPoly multivariate_lcm(const QPoly& a, const QPoly& b);

} // namespace noethops
