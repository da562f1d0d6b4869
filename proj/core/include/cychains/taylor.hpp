#pragma once

#include "cychains/rational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace cychains {

// homogeneous element with explicit degree metadata (the value may be
// zero, the degree still drives the Koszul bookkeeping)
template <class T>
struct Graded {
    T value;
    int degree = 0;
};

// Koszul data of a word of algebra inputs inside the symmetric coalgebra
// on the degree-shifted space: parities are (degree + 1) mod 2.
inline int shifted_parity(int degree) { return ((degree + 1) % 2 + 2) % 2; }

inline int sign_pow(long parity) { return ((parity % 2) + 2) % 2 == 0 ? 1 : -1; }

// unshuffle sign moving the subset S to the front, orders preserved
inline int eps_front(unsigned smask, const std::vector<int>& parities) {
    long acc = 0;
    for (size_t i = 0; i < parities.size(); ++i)
        for (size_t j = i + 1; j < parities.size(); ++j)
            if (!((smask >> i) & 1u) && ((smask >> j) & 1u)) acc += parities[i] * parities[j];
    return sign_pow(acc);
}

// unshuffle sign moving the subset S to the back, orders preserved
inline int eps_back(unsigned smask, const std::vector<int>& parities) {
    long acc = 0;
    for (size_t i = 0; i < parities.size(); ++i)
        for (size_t j = i + 1; j < parities.size(); ++j)
            if (((smask >> i) & 1u) && !((smask >> j) & 1u)) acc += parities[i] * parities[j];
    return sign_pow(acc);
}

inline int parity_sum_complement(unsigned smask, const std::vector<int>& parities) {
    long acc = 0;
    for (size_t i = 0; i < parities.size(); ++i)
        if (!((smask >> i) & 1u)) acc += parities[i];
    return static_cast<int>(acc % 2);
}

// Taylor coefficients of a degree +1 coderivation on the cofree
// cocommutative coalgebra: coeffs[k] evaluates Q_k (k >= 1). The output
// degree of Q_k is sum(degrees) + 2 - k.
template <class A>
struct AlgebraFamily {
    std::vector<std::function<A(std::span<const Graded<A>>)>> coeffs;

    bool has(size_t k) const { return k < coeffs.size() && coeffs[k]; }
    Graded<A> apply(size_t k, std::span<const Graded<A>> xs) const {
        int deg = 2 - static_cast<int>(k);
        for (const auto& x : xs) deg += x.degree;
        if (!has(k)) return Graded<A>{A{}, deg};
        return Graded<A>{coeffs[k](xs), deg};
    }
};

// Taylor coefficients of the lift to the cofree comodule: coeffs[n]
// evaluates Qt_n(x_1..x_n; m), output degree sum + deg(m) + 1 - n.
template <class A, class M>
struct ModuleFamily {
    std::vector<std::function<M(std::span<const Graded<A>>, const Graded<M>&)>> coeffs;

    bool has(size_t n) const { return n < coeffs.size() && coeffs[n]; }
    Graded<M> apply(size_t n, std::span<const Graded<A>> xs, const Graded<M>& m) const {
        int deg = m.degree + 1 - static_cast<int>(n);
        for (const auto& x : xs) deg += x.degree;
        if (!has(n)) return Graded<M>{M{}, deg};
        return Graded<M>{coeffs[n](xs, m), deg};
    }
};

// degree-zero comodule morphism coefficients: output degree sum + deg(m) - n
template <class A, class M, class N>
struct MorphismFamily {
    std::vector<std::function<N(std::span<const Graded<A>>, const Graded<M>&)>> coeffs;

    bool has(size_t n) const { return n < coeffs.size() && coeffs[n]; }
    Graded<N> apply(size_t n, std::span<const Graded<A>> xs, const Graded<M>& m) const {
        int deg = m.degree - static_cast<int>(n);
        for (const auto& x : xs) deg += x.degree;
        if (!has(n)) return Graded<N>{N{}, deg};
        return Graded<N>{coeffs[n](xs, m), deg};
    }
};

namespace taylor_detail {

template <class A>
void split_subset(std::span<const Graded<A>> xs, unsigned smask, std::vector<Graded<A>>& in,
                  std::vector<Graded<A>>& out) {
    in.clear();
    out.clear();
    for (size_t i = 0; i < xs.size(); ++i)
        ((smask >> i) & 1u ? in : out).push_back(xs[i]);
}

template <class A>
std::vector<int> parities_of(std::span<const Graded<A>> xs) {
    std::vector<int> p;
    p.reserve(xs.size());
    for (const auto& x : xs) p.push_back(shifted_parity(x.degree));
    return p;
}

} // namespace taylor_detail

// arity-n Taylor coefficient of Q o Q; identically zero iff the homotopy
// Jacobi relations hold at this arity
template <class A>
A coderivation_square_residual(const AlgebraFamily<A>& q, std::span<const Graded<A>> xs) {
    using namespace taylor_detail;
    const size_t n = xs.size();
    auto parities = parities_of(xs);
    A res{};
    std::vector<Graded<A>> in, out;
    for (unsigned smask = 1; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = eps_front(smask, parities);
        Graded<A> y = q.apply(in.size(), in);
        std::vector<Graded<A>> args;
        args.push_back(y);
        args.insert(args.end(), out.begin(), out.end());
        Graded<A> z = q.apply(args.size(), args);
        res = res + z.value.scaled(Rational(sgn));
    }
    return res;
}

// arity-n coefficient of Qt o Qt on the comodule; zero iff the module
// relations hold at this arity
template <class A, class M>
M module_axiom_residual(const AlgebraFamily<A>& q, const ModuleFamily<A, M>& qt,
                        std::span<const Graded<A>> xs, const Graded<M>& m) {
    using namespace taylor_detail;
    const size_t n = xs.size();
    auto parities = parities_of(xs);
    M res{};
    std::vector<Graded<A>> in, out;
    for (unsigned smask = 1; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = eps_front(smask, parities);
        Graded<A> y = q.apply(in.size(), in);
        std::vector<Graded<A>> args;
        args.push_back(y);
        args.insert(args.end(), out.begin(), out.end());
        Graded<M> z = qt.apply(args.size(), args, m);
        res = res + z.value.scaled(Rational(sgn));
    }
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = eps_back(smask, parities) * sign_pow(parity_sum_complement(smask, parities));
        Graded<M> inner = qt.apply(in.size(), in, m);
        Graded<M> z = qt.apply(out.size(), out, inner);
        res = res + z.value.scaled(Rational(sgn));
    }
    return res;
}

// arity-n coefficient of phi o Qt_M - Qt_N o phi; zero iff phi is a
// morphism of the comodules at this arity
template <class A, class M, class N>
N morphism_residual(const AlgebraFamily<A>& q, const ModuleFamily<A, M>& qt_m,
                    const ModuleFamily<A, N>& qt_n, const MorphismFamily<A, M, N>& phi,
                    std::span<const Graded<A>> xs, const Graded<M>& m) {
    using namespace taylor_detail;
    const size_t n = xs.size();
    auto parities = parities_of(xs);
    N res{};
    std::vector<Graded<A>> in, out;
    for (unsigned smask = 1; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = eps_front(smask, parities);
        Graded<A> y = q.apply(in.size(), in);
        std::vector<Graded<A>> args;
        args.push_back(y);
        args.insert(args.end(), out.begin(), out.end());
        Graded<N> z = phi.apply(args.size(), args, m);
        res = res + z.value.scaled(Rational(sgn));
    }
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = eps_back(smask, parities) * sign_pow(parity_sum_complement(smask, parities));
        Graded<M> inner = qt_m.apply(in.size(), in, m);
        Graded<N> z = phi.apply(out.size(), out, inner);
        res = res + z.value.scaled(Rational(sgn));
    }
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
        split_subset(xs, smask, in, out);
        int sgn = -eps_back(smask, parities);
        Graded<N> inner = phi.apply(in.size(), in, m);
        Graded<N> z = qt_n.apply(out.size(), out, inner);
        res = res + z.value.scaled(Rational(sgn));
    }
    return res;
}

// dgla -> homotopy-Lie conversion: Q_1(x) = d x, Q_2(x_1, x_2) =
// -(-1)^{|x_1|} [x_1, x_2], all higher coefficients zero
template <class A>
AlgebraFamily<A> dgla_to_linfty(std::function<A(const Graded<A>&)> differential,
                                std::function<A(const Graded<A>&, const Graded<A>&)> bracket) {
    AlgebraFamily<A> q;
    q.coeffs.resize(3);
    q.coeffs[1] = [differential](std::span<const Graded<A>> xs) { return differential(xs[0]); };
    q.coeffs[2] = [bracket](std::span<const Graded<A>> xs) {
        A b = bracket(xs[0], xs[1]);
        return b.scaled(Rational(sign_pow(xs[0].degree + 1)));
    };
    return q;
}

// dgla module -> comodule coderivation: Qt_0(m) = delta m,
// Qt_1(x; m) = -(-1)^{|x|} L_x m
template <class A, class M>
ModuleFamily<A, M> module_to_linfty(std::function<M(const Graded<M>&)> delta,
                                    std::function<M(const Graded<A>&, const Graded<M>&)> action) {
    ModuleFamily<A, M> qt;
    qt.coeffs.resize(2);
    qt.coeffs[0] = [delta](std::span<const Graded<A>>, const Graded<M>& m) { return delta(m); };
    qt.coeffs[1] = [action](std::span<const Graded<A>> xs, const Graded<M>& m) {
        M v = action(xs[0], m);
        return v.scaled(Rational(sign_pow(xs[0].degree + 1)));
    };
    return qt;
}

// adjoint action: Qt_n(x_1..x_n; x) = Q_{n+1}(x_1..x_n, x)
template <class A>
ModuleFamily<A, A> adjoint_action_module(const AlgebraFamily<A>& q, size_t max_arity) {
    ModuleFamily<A, A> out;
    out.coeffs.resize(max_arity + 1);
    for (size_t nn = 0; nn <= max_arity; ++nn) {
        if (!q.has(nn + 1)) continue;
        out.coeffs[nn] = [q, nn](std::span<const Graded<A>> xs, const Graded<A>& m) {
            std::vector<Graded<A>> args(xs.begin(), xs.end());
            args.push_back(m);
            return q.apply(nn + 1, args).value;
        };
    }
    return out;
}

// precompose the algebra slots with a strict dgla morphism
template <class ASrc, class ATgt, class M>
ModuleFamily<ASrc, M> pullback_module(std::function<ATgt(const Graded<ASrc>&)> psi,
                                      const ModuleFamily<ATgt, M>& qt) {
    ModuleFamily<ASrc, M> out;
    out.coeffs.resize(qt.coeffs.size());
    for (size_t nn = 0; nn < qt.coeffs.size(); ++nn) {
        if (!qt.has(nn)) continue;
        auto coeff = qt.coeffs[nn];
        out.coeffs[nn] = [psi, coeff](std::span<const Graded<ASrc>> xs, const Graded<M>& m) {
            std::vector<Graded<ATgt>> ys;
            ys.reserve(xs.size());
            for (const auto& x : xs) ys.push_back(Graded<ATgt>{psi(x), x.degree});
            return coeff(ys, m);
        };
    }
    return out;
}

} // namespace cychains
