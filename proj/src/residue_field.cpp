#include "noethops/residue_field.hpp"

namespace noethops {

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    if (!attached()) return o;
    if (!o.attached()) return *this;
    return ResidueElem(field_, nf_ + o.nf_); // normal forms are closed under addition
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const { return *this + (-o); }

ResidueElem ResidueElem::operator-() const {
    if (!attached()) return *this;
    return ResidueElem(field_, -nf_);
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    if (!attached() || !o.attached()) return ResidueElem();
    return ResidueElem(field_, field_->reduce(nf_ * o.nf_));
}

ResidueElem ResidueElem::inverse() const {
    if (!attached() || is_zero())
        fail(Error::Code::DivisionByZero, "inverse of zero residue-field element");
    return field_->invert(*this);
}

ResidueFieldPtr ResidueField::make(const Ideal& P, const VariableSplit& split) {
    SRingContext ctx(P.ring(), split);
    auto F = std::shared_ptr<ResidueField>(new ResidueField(std::move(ctx)));
    std::vector<RFPoly> gens;
    for (const auto& g : P.generators()) gens.push_back(F->ctx_.to_sring(g));
    F->gb_ = buchberger(gens, MonomialOrder::grevlex());
    std::vector<Monomial> leads;
    for (const auto& g : F->gb_) leads.push_back(g.lead_term(MonomialOrder::grevlex()).first);
    bool finite = false;
    F->basis_ = standard_monomials(leads, F->ctx_.sring()->arity(), &finite);
    if (!finite || F->basis_.empty())
        fail(Error::Code::BadInput,
             "prime does not extend to a maximal ideal of K(t)[x_dep]; check the variable split");
    return F;
}

ResidueElem ResidueField::zero() const {
    return ResidueElem(shared_from_this(), RFPoly::zero(ctx_.sring()));
}

ResidueElem ResidueField::one() const {
    return from_scalar(RationalFunction::one(ctx_.tring()));
}

ResidueElem ResidueField::from_scalar(const RationalFunction& c) const {
    RFPoly p = RFPoly::zero(ctx_.sring());
    p.add_term(Monomial(ctx_.sring()->arity()), c);
    return ResidueElem(shared_from_this(), std::move(p));
}

ResidueElem ResidueField::from_qpoly(const QPoly& f) const {
    return from_sring(ctx_.to_sring(f));
}

ResidueElem ResidueField::from_sring(const RFPoly& f) const {
    return ResidueElem(shared_from_this(), reduce(f));
}

RFPoly ResidueField::reduce(const RFPoly& f) const {
    return normal_form(f, gb_, MonomialOrder::grevlex());
}

std::vector<RationalFunction> ResidueField::coordinates(const ResidueElem& a) const {
    std::vector<RationalFunction> out(basis_.size(), RationalFunction::zero(ctx_.tring()));
    for (size_t i = 0; i < basis_.size(); ++i)
        if (const RationalFunction* c = a.nf().coeff(basis_[i])) out[i] = *c;
    return out;
}

ResidueElem ResidueField::invert(const ResidueElem& a) const {
    size_t dim = basis_.size();
    RationalFunction zero = RationalFunction::zero(ctx_.tring());
    DenseMatrix<RationalFunction> m(dim, dim, zero);
    for (size_t j = 0; j < dim; ++j) {
        RFPoly prod = reduce(a.nf().mul_term(basis_[j], RationalFunction::one(ctx_.tring())));
        for (size_t i = 0; i < dim; ++i)
            if (const RationalFunction* c = prod.coeff(basis_[i])) m.at(i, j) = *c;
    }
    std::vector<RationalFunction> rhs(dim, zero);
    rhs[0] = RationalFunction::one(ctx_.tring()); // basis_[0] is the monomial 1
    auto sol = exact_solve(std::move(m), std::move(rhs), zero);
    if (!sol) fail(Error::Code::DivisionByZero, "residue-field inversion failed");
    RFPoly out = RFPoly::zero(ctx_.sring());
    for (size_t j = 0; j < dim; ++j) out.add_term(basis_[j], (*sol)[j]);
    return ResidueElem(shared_from_this(), std::move(out));
}

ResidueElem residue_field_ops(const ResidueElem& a, const ResidueElem& b, ResidueOp op) {
    switch (op) {
    case ResidueOp::Add: return a + b;
    case ResidueOp::Mul: return a * b;
    case ResidueOp::Invert: return a.inverse();
    }
    fail(Error::Code::BadInput, "unknown residue-field operation");
}

} // namespace noethops
