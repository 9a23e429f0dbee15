#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "noethops/groebner.hpp"

namespace noethops {

// Generator list within a ring, with Groebner bases cached per monomial
// order.  Query operations are safe for concurrent readers; basis
// computation for one ideal is serialized on the internal mutex.
template <class K>
class IdealT {
public:
    IdealT(RingPtr ring, std::vector<Polynomial<K>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_) check_same_ring(ring_, g.ring());
    }

    IdealT(const IdealT& o) : ring_(o.ring_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = o.cache_;
    }
    IdealT& operator=(const IdealT& o) {
        if (this == &o) return *this;
        std::scoped_lock lk(mu_, o.mu_);
        ring_ = o.ring_;
        gens_ = o.gens_;
        cache_ = o.cache_;
        return *this;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }

    const std::vector<Polynomial<K>>& groebner_basis(const MonomialOrder& ord) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(ord.key());
        if (it == cache_.end()) {
            auto gb = std::make_shared<const std::vector<Polynomial<K>>>(buchberger(gens_, ord));
            it = cache_.emplace(ord.key(), std::move(gb)).first;
        }
        return *it->second;
    }

    bool is_unit_ideal() const {
        const auto& gb = groebner_basis(MonomialOrder::grevlex());
        return gb.size() == 1 && gb[0].is_constant();
    }
    bool is_zero_ideal() const { return groebner_basis(MonomialOrder::grevlex()).empty(); }

private:
    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial<K>>>> cache_;
};

using Ideal = IdealT<Rational>;

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const IdealT<K>& I,
                          const MonomialOrder& ord = MonomialOrder::grevlex()) {
    return normal_form(f, I.groebner_basis(ord), ord);
}

template <class K>
bool ideal_contains(const IdealT<K>& I, const Polynomial<K>& f) {
    return normal_form(f, I).is_zero();
}

template <class K>
bool ideal_equal(const IdealT<K>& A, const IdealT<K>& B) {
    check_same_ring(A.ring(), B.ring());
    for (const auto& g : B.generators())
        if (!ideal_contains(A, g)) return false;
    for (const auto& g : A.generators())
        if (!ideal_contains(B, g)) return false;
    return true;
}

// A cap B via one auxiliary variable u: (u*A + (1-u)*B) eliminated down to
// the original ring.
Ideal intersect_ideals(const Ideal& A, const Ideal& B);

} // namespace noethops
