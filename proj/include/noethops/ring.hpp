#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "noethops/error.hpp"

namespace noethops {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class CoeffField {
    Rational,          // exact QQ
    ComplexDouble,     // CC in double precision
    RationalFunction,  // QQ(t) for a base ring in the t-variables
    Residue,           // Frac(R/P); context carried by the elements
};

class Ring {
public:
    static RingPtr make(std::vector<std::string> names, CoeffField field = CoeffField::Rational,
                        RingPtr base = nullptr) {
        return std::shared_ptr<const Ring>(new Ring(std::move(names), field, std::move(base)));
    }

    size_t arity() const { return names_.size(); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& var_name(size_t i) const { return names_[i]; }
    CoeffField field() const { return field_; }
    RingPtr base_ring() const { return base_; }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const Ring& o) const {
        return names_ == o.names_ && field_ == o.field_;
    }

private:
    Ring(std::vector<std::string> names, CoeffField field, RingPtr base)
        : names_(std::move(names)), field_(field), base_(std::move(base)) {
        std::set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) fail(Error::Code::BadInput, "empty variable name");
            if (!seen.insert(n).second)
                fail(Error::Code::BadInput, "duplicate variable name '" + n + "'");
        }
        if (base_) {
            for (const auto& n : base_->var_names())
                if (seen.count(n))
                    fail(Error::Code::BadInput,
                         "base field variable '" + n + "' collides with ring variable");
        }
    }

    std::vector<std::string> names_;
    CoeffField field_;
    RingPtr base_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        fail(Error::Code::RingMismatch, "operands live in different rings");
}

} // namespace noethops
