#include "cychains/extended.hpp"

#include "cychains/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cychains {

void EElement::add_term(const EKey& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (dim_ < 0) dim_ = c.dim();
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffForm EElement::apply(const std::vector<LaurentPoly>& args) const {
    DiffForm r(dim_);
    for (const auto& [k, c] : terms_) {
        if (k.slots.size() != args.size()) continue;
        LaurentPoly prod = c;
        for (size_t j = 0; j < args.size() && !prod.is_zero(); ++j)
            prod = prod * apply_partial(args[j], k.slots[j]);
        if (!prod.is_zero()) r.add_component(k.form_mask, prod);
    }
    return r;
}

EElement EElement::operator-() const {
    EElement r(dim_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

EElement operator+(const EElement& a, const EElement& b) {
    EElement r = a;
    if (r.dim_ < 0) r.dim_ = b.dim_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

EElement operator-(const EElement& a, const EElement& b) { return a + (-b); }

EElement EElement::scaled(const Rational& c) const {
    EElement r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, f.scaled(c));
    return r;
}

bool operator==(const EElement& a, const EElement& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_;
}

EElement EElement::arity_part(int slots) const {
    EElement r(dim_);
    for (const auto& [k, c] : terms_)
        if (static_cast<int>(k.slots.size()) == slots) r.terms_.emplace(k, c);
    return r;
}

EElement EElement::form_rank_part(int p) const {
    EElement r(dim_);
    for (const auto& [k, c] : terms_)
        if (mask_rank(k.form_mask) == p) r.terms_.emplace(k, c);
    return r;
}

std::vector<int> EElement::arities() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_) {
        int n = static_cast<int>(k.slots.size());
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool EElement::is_normalized() const {
    for (int n : arities()) {
        EElement part = arity_part(n);
        for (int j = 1; j < n; ++j) {
            // substitute 1 into slot j
            EElement res(dim_);
            for (const auto& [k, c] : part.terms_) {
                if (!midx_is_zero(k.slots[static_cast<size_t>(j)])) continue;
                EKey t;
                t.form_mask = k.form_mask;
                t.slots = k.slots;
                t.slots.erase(t.slots.begin() + j);
                res.add_term(t, c);
            }
            if (!res.is_zero()) return false;
        }
    }
    return true;
}

EElement EElement::without_term(size_t k) const {
    EElement r(dim_);
    size_t i = 0;
    for (const auto& [key, c] : terms_) {
        if (i++ == k) continue;
        r.terms_.emplace(key, c);
    }
    return r;
}

std::string EElement::str() const {
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
        if (k.form_mask) os << " " << mask_str(k.form_mask, "dt");
    }
    return os.str();
}

EElement extended_b(const EElement& e) {
    EElement r(e.dim());
    for (const auto& [k, c] : e.terms()) {
        int n = static_cast<int>(k.slots.size()) - 1; // slots a_0..a_n
        // merge arguments i, i+1 into old slot i, for i = 0..n
        for (int i = 0; i <= n; ++i) {
            const MultiIdx& alpha = k.slots[static_cast<size_t>(i)];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                EKey t;
                t.form_mask = k.form_mask;
                for (int j = 0; j < i; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu);
                t.slots.push_back(rest);
                for (int j = i + 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational(i % 2 ? -1 : 1)));
            }
        }
        // wrap: (-1)^{n+1} Phi(a_{n+1} a_0, a_1, ..., a_n)
        {
            const MultiIdx& alpha = k.slots[0];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha); // goes to a_0
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                EKey t;
                t.form_mask = k.form_mask;
                t.slots.push_back(rest);
                for (int j = 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu); // a_{n+1}
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational((n + 1) % 2 ? -1 : 1)));
            }
        }
    }
    return r;
}

EElement extended_nabla(const EElement& e) {
    EElement r(e.dim());
    int dim = e.dim();
    if (dim < 0) return r;
    for (const auto& [k, c] : e.terms()) {
        int sgn = k.slots.size() % 2 ? -1 : 1;
        for (int a = 1; a <= dim; ++a) {
            Mask bit = Mask(1) << (a - 1);
            if (k.form_mask & bit) continue;
            int ms = mask_merge_sign(bit, k.form_mask);
            Rational w(sgn * ms);
            // derivative hits the coefficient
            LaurentPoly dc = c.partial(a);
            if (!dc.is_zero()) {
                EKey t;
                t.form_mask = k.form_mask | bit;
                t.slots = k.slots;
                r.add_term(t, dc.scaled(w));
            }
            // and each slot in turn
            for (size_t j = 0; j < k.slots.size(); ++j) {
                EKey t;
                t.form_mask = k.form_mask | bit;
                t.slots = k.slots;
                t.slots[j][static_cast<size_t>(a - 1)] += 1;
                r.add_term(t, c.scaled(w));
            }
        }
    }
    return r;
}

EElement cyclic_sigma(const EElement& e) {
    EElement r(e.dim());
    for (const auto& [k, c] : e.terms()) {
        int n = static_cast<int>(k.slots.size()) - 1;
        EKey t;
        t.form_mask = k.form_mask;
        t.slots.push_back(k.slots.back());
        for (int j = 0; j < n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
        r.add_term(t, c.scaled(Rational(n % 2 ? -1 : 1)));
    }
    return r;
}

EElement insert_unit_slot0(const EElement& e) {
    EElement r(e.dim());
    for (const auto& [k, c] : e.terms()) {
        if (k.slots.size() < 2) continue;
        if (!midx_is_zero(k.slots[0])) continue;
        EKey t;
        t.form_mask = k.form_mask;
        t.slots.assign(k.slots.begin() + 1, k.slots.end());
        r.add_term(t, c);
    }
    return r;
}

EElement connes_B_extended(const EElement& e) {
    if (!e.is_normalized())
        throw std::invalid_argument("connes_B_extended: element is not normalized");
    EElement ins = insert_unit_slot0(e);
    EElement r(e.dim());
    for (int n : ins.arities()) {
        EElement part = ins.arity_part(n);
        EElement acc(e.dim());
        EElement rot = part;
        for (int j = 0; j < n; ++j) {
            acc = acc + rot;
            rot = cyclic_sigma(rot);
        }
        r = r + acc;
    }
    return r;
}

EElement embed_cochain(const MultiDiffOp& phi) {
    if (phi.value_kind() != MultiDiffOp::Value::TopForm)
        throw std::invalid_argument("embed_cochain: top-form valued cochain required");
    int dim = phi.dim();
    Mask full = (Mask(1) << dim) - 1u;
    EElement r(dim);
    for (const auto& [s, c] : phi.terms()) {
        EKey k;
        k.form_mask = full;
        k.slots.push_back(midx_zero(dim));
        k.slots.insert(k.slots.end(), s.begin(), s.end());
        r.add_term(k, c);
    }
    return r;
}

namespace {

MultiDiffOp hkr_multideriv(const MultiVector& mv, const LaurentPoly& weight,
                           MultiDiffOp::Value value_kind) {
    int dim = mv.dim();
    MultiDiffOp out(dim, 0, value_kind);
    bool arity_set = false;
    // build per wedge-rank pieces; mixed ranks would mix arities
    for (const auto& [I, f] : mv.components()) {
        int kk = mask_rank(I);
        if (!arity_set) {
            out = MultiDiffOp(dim, kk, value_kind);
            arity_set = true;
        } else if (out.arity() != kk) {
            throw std::invalid_argument("hkr: mixed wedge ranks");
        }
        // indices of I in increasing order
        std::vector<int> idx;
        for (int i = 0; i < 32; ++i)
            if ((I >> i) & 1u) idx.push_back(i + 1);
        // iota_{d_I}(dt_{b_1} ^..^ dt_{b_k}) over all orderings b of I
        std::vector<int> b(idx);
        std::sort(b.begin(), b.end());
        do {
            DiffForm dt(dim);
            Mask acc_mask = 0;
            int wsign = 1;
            bool ok = true;
            for (int a : b) {
                Mask bit = Mask(1) << (a - 1);
                int s = mask_merge_sign(acc_mask, bit);
                if (s == 0) { ok = false; break; }
                wsign *= s;
                acc_mask |= bit;
            }
            if (!ok) continue;
            DiffForm basis_form = DiffForm::basis(dim, acc_mask, LaurentPoly::constant(dim, Rational(wsign)));
            MultiVector part = MultiVector::basis(dim, I, LaurentPoly::constant(dim, Rational(1)));
            DiffForm res = contract(part, basis_form);
            LaurentPoly cval = res.component(0);
            if (cval.is_zero()) continue;
            Slots s;
            for (int a : b) s.push_back(midx_axis(dim, a));
            out.add_term(s, f * weight * cval);
        } while (std::next_permutation(b.begin(), b.end()));
    }
    if (!arity_set) return MultiDiffOp(dim, 0, value_kind);
    return out;
}

} // namespace

MultiDiffOp hkr_vt(const VTop& x) {
    return hkr_multideriv(x.mv, x.vol.density_dt(), MultiDiffOp::Value::TopForm);
}

MultiDiffOp hkr_cochain(const MultiVector& gamma) {
    return hkr_multideriv(gamma, LaurentPoly::constant(gamma.dim(), Rational(1)),
                          MultiDiffOp::Value::Scalar);
}

EElement project_top_mod_exact(const EElement& e, int lo, int hi, int order_cap) {
    int dim = e.dim();
    if (dim < 0) return e;
    Mask full = (Mask(1) << dim) - 1u;
    EElement top(dim);
    for (const auto& [k, c] : e.terms())
        if (k.form_mask == full) top.add_term(k, c);
    if (top.is_zero()) return top;

    auto in_window = [&](const ExpVec& x) {
        for (int v : x)
            if (v < lo || v > hi) return false;
        return true;
    };
    auto orders_ok = [&](const Slots& s) {
        for (const auto& m : s)
            for (int v : m)
                if (v < 0 || v > order_cap) return false;
        return true;
    };

    // single-step preimage candidates under the connection
    std::map<EKey, std::map<ExpVec, char>> gens; // key + monomial exponent
    for (const auto& [k, c] : top.terms()) {
        for (int a = 1; a <= dim; ++a) {
            Mask bit = Mask(1) << (a - 1);
            EKey g;
            g.form_mask = full & ~bit;
            for (const auto& [exp, coef] : c.terms()) {
                // the derivative may have hit the coefficient...
                ExpVec up(exp);
                up[static_cast<size_t>(a - 1)] += 1;
                if (in_window(up)) {
                    g.slots = k.slots;
                    if (orders_ok(g.slots)) gens[g][up] = 1;
                }
                // ...or one of the slots
                for (size_t j = 0; j < k.slots.size(); ++j) {
                    if (k.slots[j][static_cast<size_t>(a - 1)] == 0) continue;
                    Slots s = k.slots;
                    s[j][static_cast<size_t>(a - 1)] -= 1;
                    EKey g2;
                    g2.form_mask = g.form_mask;
                    g2.slots = s;
                    if (in_window(exp) && orders_ok(s)) gens[g2][exp] = 1;
                }
            }
        }
    }

    // coordinates of the top part and of the generator images
    std::vector<EElement> images;
    for (const auto& [g, exps] : gens)
        for (const auto& [exp, tag] : exps) {
            EElement gen(dim);
            EKey kk = g;
            gen.add_term(kk, LaurentPoly::monomial(dim, exp, Rational(1)));
            EElement img = extended_nabla(gen);
            if (!img.is_zero()) images.push_back(img);
        }

    std::map<std::pair<EKey, ExpVec>, size_t> coord;
    auto index_of = [&](const EKey& k, const ExpVec& exp) {
        auto key = std::make_pair(k, exp);
        auto it = coord.find(key);
        if (it != coord.end()) return it->second;
        size_t idx = coord.size();
        coord.emplace(key, idx);
        return idx;
    };
    for (const auto& [k, c] : top.terms())
        for (const auto& [exp, coef] : c.terms()) index_of(k, exp);
    for (const auto& img : images)
        for (const auto& [k, c] : img.terms())
            for (const auto& [exp, coef] : c.terms()) index_of(k, exp);

    RationalMatrix m(coord.size(), images.size());
    for (size_t j = 0; j < images.size(); ++j)
        for (const auto& [k, c] : images[j].terms())
            for (const auto& [exp, coef] : c.terms()) m.at(index_of(k, exp), j) = coef;
    std::vector<Rational> v(coord.size());
    for (const auto& [k, c] : top.terms())
        for (const auto& [exp, coef] : c.terms()) v[index_of(k, exp)] = coef;

    std::vector<Rational> res = m.reduce_mod_columns(v);
    EElement out(dim);
    for (const auto& [key, idx] : coord) {
        if (res[idx].is_zero()) continue;
        EKey kk = key.first;
        out.add_term(kk, LaurentPoly::monomial(dim, key.second, res[idx]));
    }
    return out;
}

} // namespace cychains
