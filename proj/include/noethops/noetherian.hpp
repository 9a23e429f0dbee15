#pragma once

#include <optional>

#include "noethops/diffop.hpp"
#include "noethops/dual_space.hpp"
#include "noethops/numerical.hpp"
#include "noethops/residue_field.hpp"

namespace noethops {

// A point of Hilb^m(F[[y_1..y_c]]): the ideal J = <y>^m + gamma(Q) in F[y],
// with the residue-field context and discovered multiplicity.
struct HilbPoint {
    ResidueFieldPtr field;
    RingPtr yring;               // auxiliary variables, printed h<x_i>
    std::vector<FPoly> idealJ;   // reduced Groebner basis over F
    int multiplicity = 0;
    VariableSplit split;
};

struct NoetherianCertificate {
    Ideal prime;
    std::vector<DiffOp> operators;
    int multiplicity = 0;
    VariableSplit split;
};

struct NoetherianOptions {
    int colength_cap = 20;   // punctual-Hilbert colength stabilization cap
    int degree_cap = 20;     // Macaulay-kernel stabilization cap
    int inverse_degree_cap = -1; // <= 0: m + maxdeg(P) + 2
    int hybrid_retries = 3;
    SamplerConfig sampler;
    DualOptions dual;
    bool verify_input = false; // radical-membership spot checks on (Q, P)
};

struct GammaContext {
    ResidueFieldPtr field;
    RingPtr yring;
    VariableSplit split;
};
GammaContext make_gamma_context(const Ideal& P);
GammaContext make_gamma_context(const Ideal& P, const VariableSplit& split);

// gamma: x_i -> y_i + class(x_i) for dependent variables, x_j -> class(x_j)
// for independent ones.
FPoly gamma_embed(const QPoly& f, const GammaContext& ctx);

// Q |-> J = <y>^m + gamma(Q) F[y] for the smallest colength-stable power m.
HilbPoint map_to_punctual_hilbert(const Ideal& Q, const Ideal& P,
                                  const NoetherianOptions& opts = {});

// Forward strategies.
NoetherianCertificate noetherian_operators_punctual(const Ideal& Q, const Ideal& P,
                                                    const NoetherianOptions& opts = {});
NoetherianCertificate noetherian_operators_macaulay(const Ideal& I, const Ideal& P,
                                                    const NoetherianOptions& opts = {});
NoetherianCertificate noetherian_operators_hybrid(const Ideal& I, const Ideal& P,
                                                  const NoetherianOptions& opts = {},
                                                  std::optional<Point> seed_point = std::nullopt);

// Dual basis of I + (t - t0) at p with ddx-support in the dependent
// variables; the specialization of a Noetherian-operator set at p.
std::vector<ConstDiffOp<Complex>> specialized_noetherian_operators(
    const Ideal& I, const Point& p, const std::vector<int>& dependent,
    const DualOptions& opts = {});

// Inverse problem: the P-primary ideal cut out by the bisubmodule generated
// by the given operators.
Ideal ideal_from_noetherian_operators(const std::vector<DiffOp>& ops, const Ideal& P,
                                      const NoetherianOptions& opts = {});

// F-span comparison of operator lists with coefficients reduced mod P;
// kernel bases are basis-dependent, so certificates compare as spans.
bool operator_spans_equal_mod_prime(const std::vector<DiffOp>& A, const std::vector<DiffOp>& B,
                                    const Ideal& P);

// Palamodov membership: every generator lands in P under every operator.
bool certificate_annihilates(const NoetherianCertificate& cert, const Ideal& Q);

// Radical-membership spot check behind --verify-input.
void verify_primary_inputs(const Ideal& Q, const Ideal& P, int power_cap = 10);

} // namespace noethops
