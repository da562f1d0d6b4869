#pragma once

#include "cychains/cartan.hpp"

#include <span>
#include <vector>

namespace cychains {

// polynomial in the scaling parameter t with coefficients in X
template <class X>
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<X> coeffs) : c_(std::move(coeffs)) {}

    static TPoly constant(X x) { return TPoly(std::vector<X>{std::move(x)}); }

    int tdeg() const { return static_cast<int>(c_.size()) - 1; }
    const X& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // capped zeros are stored so that truncation information survives
    void add(int tpow, const X& x) {
        if (tpow >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(tpow) + 1);
        c_[static_cast<size_t>(tpow)] = c_[static_cast<size_t>(tpow)] + x;
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly r = a;
        for (int k = 0; k <= b.tdeg(); ++k) r.add(k, b.coeff(k));
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        TPoly r = a;
        for (int k = 0; k <= b.tdeg(); ++k) r.add(k, -b.coeff(k));
        return r;
    }
    TPoly scaled(const Rational& q) const {
        TPoly r = *this;
        for (auto& x : r.c_) x = x.scaled(q);
        return r;
    }

    // exact d/dt
    TPoly ddt() const {
        TPoly r;
        for (int k = 1; k <= tdeg(); ++k) r.add(k - 1, c_[static_cast<size_t>(k)].scaled(Rational(k)));
        return r;
    }

    X eval(const Rational& t) const {
        X acc{};
        Rational pw(1);
        for (int k = 0; k <= tdeg(); ++k) {
            acc = acc + c_[static_cast<size_t>(k)].scaled(pw);
            pw *= t;
        }
        return acc;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

private:
    std::vector<X> c_;
};

// S^(t): coefficient of u^j multiplied by t^j
UMultiVector scale_u(const Rational& t, const UMultiVector& gamma);

// u-bilinear insertion, the de Rham differential and u d on u-series
UDiffForm contract_u(const MultiVector& gamma, const UDiffForm& alpha);
UDiffForm contract_u(const UMultiVector& gamma, const UDiffForm& alpha);
UDiffForm de_rham_u(const UDiffForm& alpha);
UDiffForm u_d(const UDiffForm& alpha); // u * d

// iota^(t) = iota_{S^(t) gamma}
UDiffForm iota_t(const Rational& t, const UMultiVector& gamma, const UDiffForm& alpha);

// L^(t)_gamma = sum_j (ut)^j (L_{gamma_j} + t iota_{div gamma_j})
UDiffForm action_Lt(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                    const UDiffForm& alpha);
// the same action through (1/u)([u d, iota^(t)] + iota^(t)_{u div gamma});
// the division by u must be well defined
UDiffForm action_Lt_via_div_u(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                              const UDiffForm& alpha);

// dual action on multivector-valued top forms
UVTop action_Lt_dual(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                     const UVTop& x);
// delta = u dv with dv(nu Omega) = (div nu) Omega
UVTop dual_differential(const UVTop& x);

// h^(t)_gamma = -(1/u) d/dt iota^(t)_gamma, closed form
UDiffForm h_t(const Rational& t, const UMultiVector& gamma, const UDiffForm& alpha);

// the same objects as polynomials in t (coefficients are u-series forms)
TPoly<UDiffForm> iota_t_poly(const UMultiVector& gamma, const UDiffForm& alpha);
TPoly<UDiffForm> action_Lt_poly(const VolumeForm& vol, const UMultiVector& gamma,
                                const UDiffForm& alpha);
TPoly<UDiffForm> h_t_poly(const UMultiVector& gamma, const UDiffForm& alpha);
// route through the u-division, for cross-checking the closed form
TPoly<UDiffForm> h_t_poly_via_div_u(const UMultiVector& gamma, const UDiffForm& alpha);

// iota^+_gamma = sum_{j>=1} u^j iota_{gamma_j}, divided by u
UDiffForm iota_plus_div_u(const UMultiVector& gamma, const UDiffForm& alpha);

// arity-n Taylor coefficient of the exponential morphism between the
// t=0 and t=1 module structures: (1/n!) prod_i ( s * (-1)^{|gamma_i|}
// iota^+_{gamma_i} / u ) applied to alpha. The per-factor degree sign is
// the wrapper the morphism equations require; `s` is the two-valued sign
// channel, pinned by the residual tests.
UDiffForm H1_taylor(int s, std::span<const UMultiVector> gammas, std::span<const int> degrees,
                    const UDiffForm& alpha);
// degrees read off the (homogeneous, nonzero) inputs
UDiffForm H1_taylor(int s, std::span<const UMultiVector> gammas, const UDiffForm& alpha);

} // namespace cychains
