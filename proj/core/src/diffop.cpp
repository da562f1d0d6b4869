#include "cychains/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace cychains {

MultiIdx midx_zero(int dim) { return MultiIdx(static_cast<size_t>(dim), 0); }

MultiIdx midx_axis(int dim, int i) {
    MultiIdx a = midx_zero(dim);
    a[static_cast<size_t>(i - 1)] = 1;
    return a;
}

bool midx_is_zero(const MultiIdx& a) {
    for (int x : a)
        if (x) return false;
    return true;
}

MultiIdx midx_add(const MultiIdx& a, const MultiIdx& b) {
    MultiIdx r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

Rational midx_binom(const MultiIdx& a, const MultiIdx& b) {
    Rational r(1);
    for (size_t i = 0; i < a.size(); ++i) r *= binom(a[i], b[i]);
    return r;
}

std::vector<MultiIdx> midx_splits(const MultiIdx& a) {
    std::vector<MultiIdx> out;
    MultiIdx cur = midx_zero(static_cast<int>(a.size()));
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < a.size()) {
            if (cur[i] < a[i]) {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            ++i;
        }
        if (i == a.size()) break;
    }
    return out;
}

LaurentPoly apply_partial(const LaurentPoly& f, const MultiIdx& a) {
    LaurentPoly r = f;
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < a[i]; ++k) r = r.partial(static_cast<int>(i) + 1);
    return r;
}

DiffOp DiffOp::multiplication(const LaurentPoly& f) {
    DiffOp d(f.dim());
    if (!f.is_zero()) d.add_term(midx_zero(f.dim()), f);
    return d;
}

DiffOp DiffOp::partial(int dim, int i) {
    DiffOp d(dim);
    d.add_term(midx_axis(dim, i), LaurentPoly::constant(dim, Rational(1)));
    return d;
}

void DiffOp::add_term(const MultiIdx& a, const LaurentPoly& f) {
    if (f.is_zero()) return;
    if (dim_ < 0) dim_ = static_cast<int>(a.size());
    auto [it, fresh] = terms_.emplace(a, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly DiffOp::apply(const LaurentPoly& f) const {
    LaurentPoly r(dim_ >= 0 ? dim_ : f.dim());
    for (const auto& [a, c] : terms_) r += c * apply_partial(f, a);
    return r;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(dim_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    if (r.dim_ < 0) r.dim_ = b.dim_;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    int dim = a.dim_ >= 0 ? a.dim_ : b.dim_;
    DiffOp r(dim);
    // (f d^alpha)(g d^beta) = sum_{mu <= alpha} C(alpha,mu) f (d^mu g) d^{alpha-mu+beta}
    for (const auto& [alpha, f] : a.terms_)
        for (const auto& [beta, g] : b.terms_)
            for (const auto& mu : midx_splits(alpha)) {
                LaurentPoly dg = apply_partial(g, mu);
                if (dg.is_zero()) continue;
                MultiIdx rest(alpha);
                for (size_t i = 0; i < rest.size(); ++i) rest[i] -= mu[i];
                r.add_term(midx_add(rest, beta), (f * dg).scaled(midx_binom(alpha, mu)));
            }
    return r;
}

DiffOp DiffOp::scaled(const Rational& c) const {
    DiffOp r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [a, f] : terms_) r.terms_.emplace(a, f.scaled(c));
    return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < a.size(); ++i)
            for (int k = 0; k < a[i]; ++k) os << " d" << (i + 1);
    }
    return os.str();
}

Rational residue_pair(const LaurentPoly& f, const LaurentPoly& g, const VolumeForm& vol) {
    LaurentPoly prod = f * g * vol.density_dt();
    ExpVec target(static_cast<size_t>(vol.dim), -1);
    return prod.coefficient(target);
}

DiffOp formal_adjoint_diffop(const DiffOp& d, const VolumeForm& vol) {
    int dim = vol.dim;
    // adjoint of d_i against the residue functional with density c t^{k-1}:
    // d_i^* = -d_i - (k_i - 1)/t_i
    std::vector<DiffOp> axis_adj;
    for (int i = 1; i <= dim; ++i) {
        ExpVec e = exp_zero(dim);
        e[static_cast<size_t>(i - 1)] = -1;
        DiffOp adj = -DiffOp::partial(dim, i);
        adj = adj + DiffOp::multiplication(
                        LaurentPoly::monomial(dim, e, Rational(1 - vol.k[static_cast<size_t>(i - 1)])));
        axis_adj.push_back(adj);
    }
    DiffOp r(dim);
    for (const auto& [alpha, f] : d.terms()) {
        // (f d^alpha)^* = (d^alpha)^* (f .), adjoint factors commute across axes
        DiffOp acc = DiffOp::multiplication(f);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < alpha[static_cast<size_t>(i)]; ++k)
                acc = compose(axis_adj[static_cast<size_t>(i)], acc);
        r = r + acc;
    }
    return r;
}

} // namespace cychains
