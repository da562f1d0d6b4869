#pragma once

#include "cychains/chainop.hpp"
#include "cychains/taylor.hpp"
#include "cychains/uactions.hpp"

namespace cychains {

// ---- concrete coderivation families ----

// (T[[u]], u div, Schouten): Q_1(x) = u div x, Q_2(x,y) = -(-1)^{|x|}[x,y]
AlgebraFamily<UMultiVector> schouten_algebra_family(const VolumeForm& vol);
// deliberately broken Q_2 (the degree-sign prefactor dropped); must fail
AlgebraFamily<UMultiVector> schouten_algebra_family_broken(const VolumeForm& vol);
// non-Jacobi negative control: Q_2 replaced by the wedge product
AlgebraFamily<UMultiVector> wedge_nonjacobi_family(const VolumeForm& vol);

// (C^{.+1}(A), b^H, Gerstenhaber)
AlgebraFamily<MultiDiffOp> gerstenhaber_algebra_family();

// (Omega[[u]], u d, L^(t)) over the Schouten dgla
ModuleFamily<UMultiVector, UDiffForm> forms_action_module(const VolumeForm& vol, const Rational& t);
// the t = 1 action with its divergence term dropped; must fail
ModuleFamily<UMultiVector, UDiffForm> forms_action_module_broken(const VolumeForm& vol);
// (VT[[u]], u dv, dual L^(t))
ModuleFamily<UMultiVector, UVTop> vtop_dual_module(const VolumeForm& vol, const Rational& t);
// trivial module structure on T[[u]] (zero action)
ModuleFamily<UMultiVector, UMultiVector> trivial_module(const VolumeForm& vol);
// (C_.(A)[[u]], b_H + uB) over the cochain dgla via the chain action
ModuleFamily<MultiDiffOp, UHochChain> chains_module_over_cochains();
// Lie-derivative module on forms over plain multivector fields
ModuleFamily<MultiVector, UDiffForm> lie_module_plain();
// stand-in pullback structure on chains over T[[u]]: the u = 0 part of
// the argument acts through its antisymmetrized multiderivation cochain
ModuleFamily<UMultiVector, UHochChain> chains_module_standin();

// H^(1) Taylor family with sign channel s
MorphismFamily<UMultiVector, UDiffForm, UDiffForm> h1_morphism_family(int s);
// arity-0 chain-level comparison morphism (hkr on chains)
MorphismFamily<UMultiVector, UHochChain, UDiffForm> hkr_chain_morphism();

// ---- pairing-defined adjoints (materialized by probing a window) ----

struct ProbeWindow {
    int lo = -4;
    int hi = 4;
    int ucap = 4;
};

// adjoint of a module structure on forms, materialized on VT through the
// integration pairing; the unique family with
//   <Qt*_n(x; nu Omega), alpha> = -(-1)^{|nu Omega|(n+1+sum|x|)} <nu Omega, Qt_n(x; alpha)>
ModuleFamily<UMultiVector, UVTop> adjoint_module_on_vtop(
    ModuleFamily<UMultiVector, UDiffForm> qt, const VolumeForm& vol, ProbeWindow win);

// the reverse materialization, from a VT-side structure back to forms
ModuleFamily<UMultiVector, UDiffForm> adjoint_module_on_forms(
    ModuleFamily<UMultiVector, UVTop> qt, const VolumeForm& vol, ProbeWindow win);

// extensional adjoint of a chains -> forms morphism family across the two
// integration pairings: the numbers <phi*_n(x; nu Omega), c> that uniquely
// determine the adjoint coefficients, with the sign exponent
// |phi*_n(x; nhat)| (n + sum |x_j|)
USeries<Rational> adjoint_morphism_pairing(
    const MorphismFamily<UMultiVector, UHochChain, UDiffForm>& phi,
    std::span<const Graded<UMultiVector>> xs, const Graded<UVTop>& nhat, const UHochChain& c);

// ---- reinterpreted morphism ----

// Taylor data of a chains -> T[[u]] module morphism that is
// multidifferential in the chain entries. Coefficient k consumes k
// algebra inputs and yields a symbolic chain operator.
struct ChainMorphism {
    std::vector<std::function<ChainOp(std::span<const Graded<UMultiVector>>)>> coeffs;
    bool has(size_t k) const { return k < coeffs.size() && coeffs[k]; }
};

// the transform V -> V*: W_m(x_1..x_m)(gamma) = iota_{V_{m+1}(x_1..x_m, u gamma; .)} Omega
struct Reinterpreted {
    VolumeForm vol;
    ChainMorphism v;
    // arity-m coefficient on a plain generator gamma of the identified module
    EElement coefficient(std::span<const Graded<UMultiVector>> xs, const MultiVector& gamma,
                         int ucap) const;
};

Reinterpreted reinterpret_chain_morphism(ChainMorphism v, const VolumeForm& vol);

// the module coderivation on lambda-shaped extended elements:
// O_n(x; iota_lambda Omega) = -(-1)^{|lambda|(n+1+sum|x|)} iota_{lambda o P_n(x;.)} Omega
//                             + delta_{n,0} nabla iota_lambda Omega
// with P the stand-in chains structure. Output per u power.
USeries<EElement> oh_target_coefficient(size_t n, std::span<const Graded<UMultiVector>> xs,
                                        const ChainOp& lam, int lam_degree, const VolumeForm& vol,
                                        int ucap);

} // namespace cychains
