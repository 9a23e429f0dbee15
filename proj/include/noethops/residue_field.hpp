#pragma once

#include <memory>

#include "noethops/linalg.hpp"
#include "noethops/split.hpp"

namespace noethops {

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

// Element of F = Frac(R/P), represented as the normal form of a polynomial
// in S = K(t)[x_dep] modulo the Groebner basis of P S.  A default value is
// a context-free zero absorbed by arithmetic.
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(ResidueFieldPtr field, RFPoly nf) : field_(std::move(field)), nf_(std::move(nf)) {}

    bool attached() const { return field_ != nullptr; }
    const ResidueFieldPtr& field() const { return field_; }
    const RFPoly& nf() const { return nf_; }
    bool is_zero() const { return nf_.is_zero(); }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator-() const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem inverse() const;

    std::string to_string() const { return attached() ? nf_.to_string() : "0"; }

private:
    ResidueFieldPtr field_;
    RFPoly nf_; // only standard monomials, zero when default-constructed
};

// F = Frac(R/P) for a prime P with a chosen variable split; P S is maximal
// in S = K(t)[x_dep], so every nonzero normal form is invertible by a
// K(t)-linear solve on the standard-monomial basis.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
public:
    static ResidueFieldPtr make(const Ideal& P, const VariableSplit& split);

    const SRingContext& ctx() const { return ctx_; }
    const std::vector<RFPoly>& prime_basis() const { return gb_; }
    const std::vector<Monomial>& std_monomials() const { return basis_; }
    size_t dimension() const { return basis_.size(); }

    ResidueElem zero() const;
    ResidueElem one() const;
    ResidueElem from_qpoly(const QPoly& f) const;     // reduce an element of R
    ResidueElem from_sring(const RFPoly& f) const;    // reduce an element of S
    ResidueElem from_scalar(const RationalFunction& c) const;

    RFPoly reduce(const RFPoly& f) const;
    std::vector<RationalFunction> coordinates(const ResidueElem& a) const;
    ResidueElem invert(const ResidueElem& a) const;

private:
    explicit ResidueField(SRingContext ctx) : ctx_(std::move(ctx)) {}

    SRingContext ctx_;
    std::vector<RFPoly> gb_;
    std::vector<Monomial> basis_;
};

template <>
struct FieldTraits<ResidueElem> {
    static constexpr bool exact = true;
    static bool is_zero(const ResidueElem& a) { return a.is_zero(); }
    static ResidueElem zero_like(const ResidueElem& a) {
        return a.attached() ? a.field()->zero() : ResidueElem();
    }
    static ResidueElem one_like(const ResidueElem& a) {
        if (!a.attached()) fail(Error::Code::BadInput, "residue-field one needs a context");
        return a.field()->one();
    }
    static ResidueElem inverse(const ResidueElem& a) { return a.inverse(); }
    static std::string to_string(const ResidueElem& a) { return a.to_string(); }
    static bool compound(const ResidueElem& a) {
        if (!a.attached() || a.is_zero()) return false;
        if (a.nf().term_count() > 1) return true;
        return FieldTraits<RationalFunction>::compound(a.nf().terms().begin()->second);
    }
};

using FPoly = Polynomial<ResidueElem>; // F[y]

// residue-field arithmetic entry point used by the CLI and tests
enum class ResidueOp { Add, Mul, Invert };
ResidueElem residue_field_ops(const ResidueElem& a, const ResidueElem& b, ResidueOp op);

} // namespace noethops
