#pragma once

#include "noethops/ideal.hpp"
#include "noethops/rational_function.hpp"

namespace noethops {

// Partition of the ring variables into a maximal independent set t modulo a
// prime P and the complementary dependent set, both as ascending indices
// into the original ring.
struct VariableSplit {
    std::vector<int> independent;
    std::vector<int> dependent;

    int codim() const { return static_cast<int>(dependent.size()); }
};

// Deterministic maximal independent set modulo P: candidate subsets are
// scanned by descending size, lexicographically within a size, and the
// first subset meeting no lead-term support of the grevlex basis wins.
// Errors on the unit ideal.
VariableSplit independent_sets(const Ideal& P);

// Conversion context for S = K(t)[x_dep]: the localization of the original
// ring at the independent variables.
class SRingContext {
public:
    SRingContext(RingPtr original, VariableSplit split);

    const RingPtr& original() const { return original_; }
    const RingPtr& tring() const { return tring_; }
    const RingPtr& sring() const { return sring_; }
    const VariableSplit& split() const { return split_; }

    RFPoly to_sring(const QPoly& f) const;
    // Clears every denominator with one LCM from QQ[t]; the multiplier used
    // is returned through den_out when requested.
    QPoly from_sring(const RFPoly& f, QPoly* den_out = nullptr) const;
    // QQ[t] polynomial viewed inside the original ring.
    QPoly t_poly_to_original(const QPoly& f) const;

private:
    RingPtr original_;
    RingPtr tring_;
    RingPtr sring_;
    VariableSplit split_;
};

// dim_F of the zero-dimensional extension of Q to S; errors when the
// extension is not zero-dimensional.
int multiplicity_over_prime(const Ideal& Q, const Ideal& P, const VariableSplit& split);

// Standard monomials (complement of the lead-term staircase) of a reduced
// basis; errors via the returned flag when infinite.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, size_t arity,
                                         bool* finite);

} // namespace noethops
