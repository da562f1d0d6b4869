#include "cychains/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace cychains {

std::mt19937_64 make_rng(uint64_t seed, const std::string& identity_id, uint64_t trial) {
    uint64_t h = 1469598103934665603ull; // FNV-1a
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(seed);
    for (char ch : identity_id) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    mix(trial);
    return std::mt19937_64(h);
}

int Gen::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

Rational Gen::coefficient() {
    int num = uniform(-3, 3);
    if (num == 0) num = 1;
    int den = uniform(1, 2);
    return Rational(num, den);
}

ExpVec Gen::exponent() {
    ExpVec e(static_cast<size_t>(cfg_.dim));
    for (auto& x : e) x = uniform(cfg_.win_lo, cfg_.win_hi);
    return e;
}

LaurentPoly Gen::poly(int max_terms) {
    LaurentPoly p(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) p.add_term(exponent(), coefficient());
    return p;
}

LaurentPoly Gen::poly_nonconstant(int max_terms) {
    LaurentPoly p = poly(max_terms).strip_constant();
    if (p.is_zero()) {
        ExpVec e = exp_zero(cfg_.dim);
        e[0] = 1;
        p.add_term(e, coefficient());
    }
    return p;
}

MultiVector Gen::multivector(int rank, int max_terms) {
    MultiVector r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        // random mask of the requested rank
        std::vector<int> axes(static_cast<size_t>(cfg_.dim));
        for (int a = 0; a < cfg_.dim; ++a) axes[static_cast<size_t>(a)] = a;
        std::shuffle(axes.begin(), axes.end(), rng_);
        Mask m = 0;
        for (int a = 0; a < rank; ++a) m |= Mask(1) << axes[static_cast<size_t>(a)];
        r.add_component(m, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

DiffForm Gen::form(int rank, int max_terms) {
    DiffForm r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> axes(static_cast<size_t>(cfg_.dim));
        for (int a = 0; a < cfg_.dim; ++a) axes[static_cast<size_t>(a)] = a;
        std::shuffle(axes.begin(), axes.end(), rng_);
        Mask m = 0;
        for (int a = 0; a < rank; ++a) m |= Mask(1) << axes[static_cast<size_t>(a)];
        r.add_component(m, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

MultiVector Gen::multivector_mixed(int max_terms) {
    MultiVector r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) r += multivector(uniform(0, cfg_.dim), 1);
    return r;
}

DiffForm Gen::form_mixed(int max_terms) {
    DiffForm r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) r += form(uniform(0, cfg_.dim), 1);
    return r;
}

int Gen::umv_degree() { return uniform(-1, cfg_.dim - 1 + 2 * std::min(cfg_.ucap, 1)); }

int Gen::uform_degree() { return uniform(-cfg_.dim, 2 * std::min(cfg_.ucap, 1)); }

UMultiVector Gen::umultivector(int degree, int max_terms) {
    UMultiVector r = UMultiVector::zero(cfg_.ucap);
    int placed = 0;
    for (int j = 0; j <= cfg_.ucap; ++j) {
        int rank = degree + 1 - 2 * j;
        if (rank < 0 || rank > cfg_.dim) continue;
        if (uniform(0, 1) == 0 && placed > 0) continue;
        r.coeff(j) = multivector(rank, std::max(1, max_terms - 1));
        ++placed;
    }
    if (placed == 0) {
        for (int j = 0; j <= cfg_.ucap; ++j) {
            int rank = degree + 1 - 2 * j;
            if (rank >= 0 && rank <= cfg_.dim) {
                r.coeff(j) = multivector(rank, 1);
                break;
            }
        }
    }
    return r;
}

UDiffForm Gen::udiffform(int degree, int max_terms) {
    UDiffForm r = UDiffForm::zero(cfg_.ucap);
    int placed = 0;
    for (int j = 0; j <= cfg_.ucap; ++j) {
        int rank = 2 * j - degree;
        if (rank < 0 || rank > cfg_.dim) continue;
        if (uniform(0, 1) == 0 && placed > 0) continue;
        r.coeff(j) = form(rank, std::max(1, max_terms - 1));
        ++placed;
    }
    if (placed == 0) {
        for (int j = 0; j <= cfg_.ucap; ++j) {
            int rank = 2 * j - degree;
            if (rank >= 0 && rank <= cfg_.dim) {
                r.coeff(j) = form(rank, 1);
                break;
            }
        }
    }
    return r;
}

UVTop Gen::uvtop(const VolumeForm& vol, int degree, int max_terms) {
    UVTop r = UVTop::zero(cfg_.ucap);
    int placed = 0;
    for (int j = 0; j <= cfg_.ucap; ++j) {
        int rank = degree + 1 - 2 * j;
        if (rank < 0 || rank > cfg_.dim) continue;
        if (uniform(0, 1) == 0 && placed > 0) continue;
        r.coeff(j) = VTop(multivector(rank, std::max(1, max_terms - 1)), vol);
        ++placed;
    }
    if (placed == 0) {
        for (int j = 0; j <= cfg_.ucap; ++j) {
            int rank = degree + 1 - 2 * j;
            if (rank >= 0 && rank <= cfg_.dim) {
                r.coeff(j) = VTop(multivector(rank, 1), vol);
                break;
            }
        }
    }
    return r;
}

HochChain Gen::chain(int len, int max_terms) {
    HochChain r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        std::vector<LaurentPoly> entries;
        entries.push_back(LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
        for (int j = 0; j < len; ++j) {
            ExpVec e = exponent();
            bool zero = true;
            for (int x : e)
                if (x) zero = false;
            if (zero) e[0] = 1;
            entries.push_back(LaurentPoly::monomial(cfg_.dim, e, Rational(1)));
        }
        r = r + HochChain::elementary(cfg_.dim, entries);
    }
    return r;
}

UHochChain Gen::uchain(int degree, int max_terms) {
    UHochChain r = UHochChain::zero(cfg_.ucap);
    int placed = 0;
    for (int j = 0; j <= cfg_.ucap; ++j) {
        int len = 2 * j - degree;
        if (len < 0 || len > 3) continue;
        if (uniform(0, 1) == 0 && placed > 0) continue;
        r.coeff(j) = chain(len, max_terms);
        ++placed;
    }
    if (placed == 0) {
        for (int j = 0; j <= cfg_.ucap; ++j) {
            int len = 2 * j - degree;
            if (len >= 0 && len <= 3) {
                r.coeff(j) = chain(len, 1);
                break;
            }
        }
    }
    return r;
}

MultiDiffOp Gen::cochain(int arity, int max_terms, int max_order, bool normalized) {
    MultiDiffOp r(cfg_.dim, arity, MultiDiffOp::Value::Scalar);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        Slots s;
        for (int j = 0; j < arity; ++j) {
            MultiIdx m = midx_zero(cfg_.dim);
            int total = normalized ? uniform(1, max_order) : uniform(0, max_order);
            for (int o = 0; o < total; ++o) m[static_cast<size_t>(uniform(0, cfg_.dim - 1))] += 1;
            s.push_back(m);
        }
        r.add_term(s, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

MultiDiffOp Gen::cochain_top(int arity, int max_terms, int max_order) {
    MultiDiffOp sc = cochain(arity, max_terms, max_order, true);
    MultiDiffOp r(cfg_.dim, arity, MultiDiffOp::Value::TopForm);
    for (const auto& [s, c] : sc.terms()) r.add_term(s, c);
    return r;
}

DiffOp Gen::diffop(int max_order, int max_terms) {
    DiffOp r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        MultiIdx m = midx_zero(cfg_.dim);
        int total = uniform(0, max_order);
        for (int o = 0; o < total; ++o) m[static_cast<size_t>(uniform(0, cfg_.dim - 1))] += 1;
        r.add_term(m, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

EElement Gen::eelement(int arity, int form_rank, int max_terms, int max_order, bool normalized) {
    EElement r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        EKey k;
        std::vector<int> axes(static_cast<size_t>(cfg_.dim));
        for (int a = 0; a < cfg_.dim; ++a) axes[static_cast<size_t>(a)] = a;
        std::shuffle(axes.begin(), axes.end(), rng_);
        for (int a = 0; a < form_rank; ++a) k.form_mask |= Mask(1) << axes[static_cast<size_t>(a)];
        for (int j = 0; j <= arity; ++j) {
            MultiIdx m = midx_zero(cfg_.dim);
            int minord = (normalized && j >= 1) ? 1 : 0;
            int total = uniform(minord, max_order);
            for (int o = 0; o < total; ++o) m[static_cast<size_t>(uniform(0, cfg_.dim - 1))] += 1;
            if (normalized && j >= 1 && midx_is_zero(m)) m[0] = 1;
            k.slots.push_back(m);
        }
        r.add_term(k, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

ChainOp Gen::chainop(int arity, int max_terms, int max_order) {
    ChainOp r(cfg_.dim);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        ChainOp::Key k;
        for (int j = 0; j <= arity; ++j) {
            MultiIdx m = midx_zero(cfg_.dim);
            int minord = j >= 1 ? 1 : 0;
            int total = uniform(minord, max_order);
            for (int o = 0; o < total; ++o) m[static_cast<size_t>(uniform(0, cfg_.dim - 1))] += 1;
            if (j >= 1 && midx_is_zero(m)) m[0] = 1;
            k.slots.push_back(m);
        }
        int rank = uniform(0, cfg_.dim);
        std::vector<int> axes(static_cast<size_t>(cfg_.dim));
        for (int a = 0; a < cfg_.dim; ++a) axes[static_cast<size_t>(a)] = a;
        std::shuffle(axes.begin(), axes.end(), rng_);
        for (int a = 0; a < rank; ++a) k.out |= Mask(1) << axes[static_cast<size_t>(a)];
        r.add_term(k, LaurentPoly::monomial(cfg_.dim, exponent(), coefficient()));
    }
    return r;
}

std::vector<int> Gen::permutation(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
}

} // namespace cychains
