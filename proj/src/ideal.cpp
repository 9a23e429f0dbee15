#include "noethops/ideal.hpp"

namespace noethops {

namespace {

QPoly lift_to_extended(const QPoly& f, const RingPtr& ext) {
    QPoly out = QPoly::zero(ext);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(ext->arity());
        std::copy(m.e.begin(), m.e.end(), mm.e.begin());
        out.add_term(std::move(mm), c);
    }
    return out;
}

QPoly project_from_extended(const QPoly& f, const RingPtr& orig) {
    QPoly out = QPoly::zero(orig);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(orig->arity());
        std::copy(m.e.begin(), m.e.begin() + static_cast<long>(orig->arity()), mm.e.begin());
        out.add_term(std::move(mm), c);
    }
    return out;
}

} // namespace

Ideal intersect_ideals(const Ideal& A, const Ideal& B) {
    check_same_ring(A.ring(), B.ring());
    const RingPtr& ring = A.ring();
    std::string aux = "u";
    while (ring->var_index(aux) >= 0) aux += "_";
    std::vector<std::string> names = ring->var_names();
    names.push_back(aux);
    RingPtr ext = Ring::make(std::move(names), CoeffField::Rational);
    int un = static_cast<int>(ring->arity());

    QPoly u = QPoly::variable(ext, static_cast<size_t>(un));
    QPoly one = QPoly::constant(ext, Rational(1));
    std::vector<QPoly> gens;
    for (const auto& a : A.generators()) gens.push_back(u * lift_to_extended(a, ext));
    for (const auto& b : B.generators()) gens.push_back((one - u) * lift_to_extended(b, ext));

    auto gb = buchberger(gens, MonomialOrder::elimination({un}));
    std::vector<QPoly> kept;
    for (const auto& g : gb)
        if (!g.involves(static_cast<size_t>(un))) kept.push_back(project_from_extended(g, ring));
    if (kept.empty()) kept.push_back(QPoly::zero(ring));
    return Ideal(ring, std::move(kept));
}

} // namespace noethops
