#include "cychains/chainop.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cychains {

void ChainOp::add_term(const Key& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (dim_ < 0) dim_ = c.dim();
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiVector ChainOp::apply(const HochChain& c) const {
    MultiVector r(dim_ >= 0 ? dim_ : c.dim());
    for (const auto& [key, coef] : c.terms()) {
        for (const auto& [k, cpoly] : terms_) {
            if (k.slots.size() != key.size()) continue;
            LaurentPoly prod = cpoly.scaled(coef);
            for (size_t j = 0; j < key.size() && !prod.is_zero(); ++j)
                prod = prod * apply_partial(LaurentPoly::monomial(c.dim(), key[j], Rational(1)),
                                            k.slots[j]);
            if (!prod.is_zero()) r.add_component(k.out, prod);
        }
    }
    return r;
}

ChainOp ChainOp::operator-() const {
    ChainOp r(dim_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ChainOp operator+(const ChainOp& a, const ChainOp& b) {
    ChainOp r = a;
    if (r.dim_ < 0) r.dim_ = b.dim_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

ChainOp operator-(const ChainOp& a, const ChainOp& b) { return a + (-b); }

ChainOp ChainOp::scaled(const Rational& c) const {
    ChainOp r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, f.scaled(c));
    return r;
}

bool operator==(const ChainOp& a, const ChainOp& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_;
}

bool ChainOp::is_normalized() const {
    for (const auto& [k, c] : terms_)
        for (size_t j = 1; j < k.slots.size(); ++j)
            if (midx_is_zero(k.slots[j])) return false;
    return true;
}

ChainOp ChainOp::without_term(size_t k) const {
    ChainOp r(dim_);
    size_t i = 0;
    for (const auto& [key, c] : terms_) {
        if (i++ == k) continue;
        r.terms_.emplace(key, c);
    }
    return r;
}

std::string ChainOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")[";
        for (size_t j = 0; j < k.slots.size(); ++j) {
            if (j) os << "|";
            bool any = false;
            for (size_t i = 0; i < k.slots[j].size(); ++i)
                for (int x = 0; x < k.slots[j][i]; ++x) {
                    os << "d" << (i + 1);
                    any = true;
                }
            if (!any) os << "1";
        }
        os << "]";
        if (k.out) os << " -> " << mask_str(k.out, "d");
    }
    return os.str();
}

ChainOp precompose_boundary(const ChainOp& lam) {
    ChainOp r(lam.dim());
    for (const auto& [k, c] : lam.terms()) {
        int n = static_cast<int>(k.slots.size()) - 1;
        for (int i = 0; i <= n; ++i) {
            const MultiIdx& alpha = k.slots[static_cast<size_t>(i)];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                ChainOp::Key t;
                t.out = k.out;
                for (int j = 0; j < i; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu);
                t.slots.push_back(rest);
                for (int j = i + 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational(i % 2 ? -1 : 1)));
            }
        }
        {
            const MultiIdx& alpha = k.slots[0];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                ChainOp::Key t;
                t.out = k.out;
                t.slots.push_back(rest);
                for (int j = 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu);
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational((n + 1) % 2 ? -1 : 1)));
            }
        }
    }
    return r;
}

ChainOp precompose_connes_B(const ChainOp& lam) {
    ChainOp r(lam.dim());
    for (const auto& [k, c] : lam.terms()) {
        int slots = static_cast<int>(k.slots.size());
        if (slots < 2) continue;
        if (!midx_is_zero(k.slots[0])) continue; // unit lands in slot 0
        int m = slots - 2; // composed operator takes a_0..a_m
        for (int j = 0; j <= m; ++j) {
            ChainOp::Key t;
            t.out = k.out;
            t.slots.resize(static_cast<size_t>(m + 1));
            // arg a_i sits at rotated position 1 + ((i - j) mod (m+1)) of lam
            for (int i = 0; i <= m; ++i) {
                int pos = 1 + (((i - j) % (m + 1)) + (m + 1)) % (m + 1);
                t.slots[static_cast<size_t>(i)] = k.slots[static_cast<size_t>(pos)];
            }
            r.add_term(t, c.scaled(Rational((j * m) % 2 ? -1 : 1)));
        }
    }
    return r;
}

ChainOp precompose_action(const ChainOp& lam, const MultiDiffOp& d) {
    if (d.value_kind() != MultiDiffOp::Value::Scalar)
        throw std::invalid_argument("precompose_action: scalar cochain required");
    int m = d.arity();
    int dim = lam.dim() >= 0 ? lam.dim() : d.dim();
    ChainOp r(dim);
    for (const auto& [k, c] : lam.terms()) {
        int len = static_cast<int>(k.slots.size()); // lam takes len entries
        int n = len - 1 + m - 1;                    // composed operator takes a_0..a_n
        if (n < 0 || m > n + 1) continue;
        for (const auto& [ds, dc] : d.terms()) {
            // wrap-around terms: D(a_{j+1},..,a_0,..) lands in lam slot 0
            for (int j = n - m + 1; j <= n; ++j) {
                int sgn = (static_cast<long>(n) * (j + 1)) % 2 ? -1 : 1;
                const MultiIdx& beta0 = k.slots[0];
                // distribute beta0 over the coefficient of D and its m arguments
                std::vector<MultiIdx> acc;
                std::function<void(const MultiIdx&, int, const Rational&)> rec =
                    [&](const MultiIdx& restid, int bucket, const Rational& w) {
                        if (bucket == m) {
                            LaurentPoly coef = c * apply_partial(dc, restid);
                            if (coef.is_zero()) return;
                            ChainOp::Key t;
                            t.out = k.out;
                            t.slots.resize(static_cast<size_t>(n + 1));
                            // D consumes entries (j+1..n, 0.., m+j-n-1) cyclically
                            for (int s = 1; s <= m; ++s) {
                                int idx = (j + s) % (n + 1);
                                t.slots[static_cast<size_t>(idx)] =
                                    midx_add(ds[static_cast<size_t>(s - 1)], acc[static_cast<size_t>(s - 1)]);
                            }
                            // remaining entries feed lam slots 1..
                            int lamslot = 1;
                            for (int s = m + j - n; s <= j; ++s)
                                t.slots[static_cast<size_t>(s)] = k.slots[static_cast<size_t>(lamslot++)];
                            r.add_term(t, coef.scaled(w * Rational(sgn)));
                            return;
                        }
                        for (const auto& mu : midx_splits(restid)) {
                            MultiIdx rest(restid);
                            for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                            acc.push_back(mu);
                            rec(rest, bucket + 1, w * midx_binom(restid, mu));
                            acc.pop_back();
                        }
                    };
                rec(beta0, 0, Rational(1));
            }
            // interior insertions: D(a_{i+1}..a_{i+m}) lands in lam slot i+1
            for (int i = 0; i + m <= n; ++i) {
                int lamslot = i + 1;
                if (lamslot >= len) continue;
                int sgn = (static_cast<long>(m - 1) * (i + 1)) % 2 ? -1 : 1;
                const MultiIdx& beta = k.slots[static_cast<size_t>(lamslot)];
                std::vector<MultiIdx> acc;
                std::function<void(const MultiIdx&, int, const Rational&)> rec =
                    [&](const MultiIdx& restid, int bucket, const Rational& w) {
                        if (bucket == m) {
                            LaurentPoly coef = c * apply_partial(dc, restid);
                            if (coef.is_zero()) return;
                            ChainOp::Key t;
                            t.out = k.out;
                            t.slots.resize(static_cast<size_t>(n + 1));
                            for (int s = 0; s <= i; ++s)
                                t.slots[static_cast<size_t>(s)] = k.slots[static_cast<size_t>(s)];
                            for (int s = 1; s <= m; ++s)
                                t.slots[static_cast<size_t>(i + s)] =
                                    midx_add(ds[static_cast<size_t>(s - 1)], acc[static_cast<size_t>(s - 1)]);
                            for (int s = i + m + 1; s <= n; ++s)
                                t.slots[static_cast<size_t>(s)] =
                                    k.slots[static_cast<size_t>(s - m + 1)];
                            r.add_term(t, coef.scaled(w * Rational(sgn)));
                            return;
                        }
                        for (const auto& mu : midx_splits(restid)) {
                            MultiIdx rest(restid);
                            for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                            acc.push_back(mu);
                            rec(rest, bucket + 1, w * midx_binom(restid, mu));
                            acc.pop_back();
                        }
                    };
                rec(beta, 0, Rational(1));
            }
        }
    }
    return r;
}

EElement chainop_to_eelement(const ChainOp& lam, const VolumeForm& vol) {
    EElement r(vol.dim);
    if (lam.is_zero()) return r;
    Mask full = (Mask(1) << vol.dim) - 1u;
    LaurentPoly rho = vol.density_dt();
    for (const auto& [k, c] : lam.terms()) {
        // iota_{d_K}(rho dt_full) = rho * sign * dt_{full \ K}
        MultiVector mv = MultiVector::basis(vol.dim, k.out, LaurentPoly::constant(vol.dim, Rational(1)));
        DiffForm contracted = contract(mv, DiffForm::basis(vol.dim, full, rho));
        for (const auto& [mask, poly] : contracted.components()) {
            EKey t;
            t.form_mask = mask;
            t.slots = k.slots;
            r.add_term(t, c * poly);
        }
    }
    return r;
}

ChainOp toy_chain_to_vector(const MultiVector& gamma) {
    int dim = gamma.dim();
    ChainOp r(dim);
    for (const auto& [I, f] : gamma.components()) {
        int k = mask_rank(I);
        // arity part n <= k: slots (0, e_{b_1}, ..., e_{b_n}) against the
        // mirror contraction of dt_{b_1}^..^dt_{b_n} into d_I
        for (int n = 0; n <= k; ++n) {
            // iterate n-tuples of distinct indices from I
            std::vector<int> idx;
            for (int i = 0; i < 32; ++i)
                if ((I >> i) & 1u) idx.push_back(i + 1);
            std::vector<int> tuple(static_cast<size_t>(n));
            std::function<void(int, Mask)> rec = [&](int depth, Mask used) {
                if (depth == n) {
                    DiffForm dt(dim);
                    Mask acc_mask = 0;
                    int wsign = 1;
                    for (int s = 0; s < n; ++s) {
                        Mask bit = Mask(1) << (tuple[static_cast<size_t>(s)] - 1);
                        int ms = mask_merge_sign(acc_mask, bit);
                        wsign *= ms;
                        acc_mask |= bit;
                    }
                    MultiVector mv = MultiVector::basis(dim, I, LaurentPoly::constant(dim, Rational(1)));
                    MultiVector res = contract_form_into_mv(
                        DiffForm::basis(dim, acc_mask, LaurentPoly::constant(dim, Rational(wsign))), mv);
                    for (const auto& [outmask, poly] : res.components()) {
                        ChainOp::Key t;
                        t.out = outmask;
                        t.slots.push_back(midx_zero(dim));
                        for (int s = 0; s < n; ++s)
                            t.slots.push_back(midx_axis(dim, tuple[static_cast<size_t>(s)]));
                        r.add_term(t, f * poly);
                    }
                    return;
                }
                for (int a : idx) {
                    Mask bit = Mask(1) << (a - 1);
                    if (used & bit) continue;
                    tuple[static_cast<size_t>(depth)] = a;
                    rec(depth + 1, used | bit);
                }
            };
            rec(0, 0);
        }
    }
    return r;
}

} // namespace cychains
