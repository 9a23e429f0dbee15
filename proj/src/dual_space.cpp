#include "noethops/dual_space.hpp"

namespace noethops {

RingPtr complex_ring_like(const RingPtr& ring) {
    return Ring::make(ring->var_names(), CoeffField::ComplexDouble);
}

std::vector<CPoly> complex_generators(const Ideal& I, const RingPtr& cring) {
    std::vector<CPoly> out;
    for (const auto& g : I.generators()) out.push_back(to_complex_poly(g, cring));
    return out;
}

} // namespace noethops
