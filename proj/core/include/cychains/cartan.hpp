#pragma once

#include "cychains/multivector.hpp"

namespace cychains {

// graded-commutative wedge products
MultiVector wedge(const MultiVector& a, const MultiVector& b);
DiffForm wedge_form(const DiffForm& a, const DiffForm& b);

// insertion iota_gamma alpha, fixed by iota_{d_i} removing dt_i from the
// left with position sign and iota_{a^b} = iota_a iota_b
DiffForm contract(const MultiVector& gamma, const DiffForm& alpha);

// mirror contraction of a form into a multivector (same position-sign
// convention, used to pair symbol data against multivectors)
MultiVector contract_form_into_mv(const DiffForm& alpha, const MultiVector& gamma);

DiffForm de_rham(const DiffForm& alpha);

// L_gamma = [d, iota_gamma] with the Koszul sign of the shifted degree
DiffForm lie_derivative(const MultiVector& gamma, const DiffForm& alpha);

// Schouten bracket via the double sum over decomposable terms
MultiVector schouten(const MultiVector& a, const MultiVector& b);
UMultiVector schouten(const UMultiVector& a, const UMultiVector& b);

// unique eta with iota_eta Omega = d iota_gamma Omega
MultiVector divergence(const VolumeForm& vol, const MultiVector& gamma);

// solve iota_nu Omega = alpha for nu (alpha arbitrary rank)
MultiVector dualize_form(const VolumeForm& vol, const DiffForm& alpha);

// integration on the torus model: coefficient of t^(-1,..,-1) in the
// density of a top form; vanishes on exact forms
Rational residue_integral(const DiffForm& eta);

// <nu Omega, alpha> = residue of (iota_nu alpha) Omega; 0 on rank mismatch
Rational pair_vt_form(const VTop& x, const DiffForm& alpha);
USeries<Rational> pair_vt_form(const UVTop& x, const UDiffForm& alpha);

} // namespace cychains
