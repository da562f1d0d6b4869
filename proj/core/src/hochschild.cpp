#include "cychains/hochschild.hpp"

#include "cychains/cartan.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cychains {

namespace {

int par(long x) { return static_cast<int>(((x % 2) + 2) % 2); }
int sign_of_parity(long x) { return par(x) == 0 ? 1 : -1; }

// all ways to split a into `buckets` nonnegative parts, with multinomial
// coefficients
void distribute(const MultiIdx& a, int buckets, std::vector<MultiIdx>& acc, const Rational& coef,
                const std::function<void(const std::vector<MultiIdx>&, const Rational&)>& sink) {
    if (buckets == 1) {
        acc.push_back(a);
        sink(acc, coef);
        acc.pop_back();
        return;
    }
    for (const auto& mu : midx_splits(a)) {
        MultiIdx rest(a);
        for (size_t i = 0; i < rest.size(); ++i) rest[i] -= mu[i];
        acc.push_back(mu);
        distribute(rest, buckets - 1, acc, coef * midx_binom(a, mu), sink);
        acc.pop_back();
    }
}

} // namespace

MultiDiffOp MultiDiffOp::multiplication(int dim) {
    MultiDiffOp m(dim, 2, Value::Scalar);
    m.add_term(Slots{midx_zero(dim), midx_zero(dim)}, LaurentPoly::constant(dim, Rational(1)));
    return m;
}

MultiDiffOp MultiDiffOp::partial_cochain(int dim, const MultiIdx& a) {
    MultiDiffOp d(dim, 1, Value::Scalar);
    d.add_term(Slots{a}, LaurentPoly::constant(dim, Rational(1)));
    return d;
}

MultiDiffOp MultiDiffOp::constant_cochain(const LaurentPoly& f) {
    MultiDiffOp d(f.dim(), 0, Value::Scalar);
    if (!f.is_zero()) d.add_term(Slots{}, f);
    return d;
}

void MultiDiffOp::add_term(const Slots& s, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(s.size()) != arity_)
        throw std::invalid_argument("MultiDiffOp::add_term: slot count != arity");
    if (dim_ < 0) dim_ = c.dim();
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly MultiDiffOp::apply(const std::vector<LaurentPoly>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("MultiDiffOp::apply: argument count != arity");
    LaurentPoly r(dim_);
    for (const auto& [s, c] : terms_) {
        LaurentPoly prod = c;
        for (size_t j = 0; j < s.size() && !prod.is_zero(); ++j)
            prod = prod * apply_partial(args[j], s[j]);
        r += prod;
    }
    return r;
}

DiffForm MultiDiffOp::apply_form(const std::vector<LaurentPoly>& args) const {
    if (value_ != Value::TopForm)
        throw std::invalid_argument("MultiDiffOp::apply_form: operator is scalar-valued");
    LaurentPoly density = apply(args);
    Mask full = (Mask(1) << dim_) - 1u;
    return DiffForm::basis(dim_, full, density);
}

MultiDiffOp MultiDiffOp::insert_one(int j) const {
    if (j < 1 || j > arity_) throw std::invalid_argument("MultiDiffOp::insert_one: slot out of range");
    MultiDiffOp r(dim_, arity_ - 1, value_);
    for (const auto& [s, c] : terms_) {
        if (!midx_is_zero(s[static_cast<size_t>(j - 1)])) continue;
        Slots t(s);
        t.erase(t.begin() + (j - 1));
        r.add_term(t, c);
    }
    return r;
}

bool MultiDiffOp::is_normalized() const {
    for (int j = 1; j <= arity_; ++j)
        if (!insert_one(j).is_zero()) return false;
    return true;
}

MultiDiffOp MultiDiffOp::operator-() const {
    MultiDiffOp r(dim_, arity_, value_);
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
}

MultiDiffOp operator+(const MultiDiffOp& a, const MultiDiffOp& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.arity_ != b.arity_ || a.value_ != b.value_)
        throw std::invalid_argument("MultiDiffOp: arity or value mismatch in sum");
    MultiDiffOp r = a;
    for (const auto& [s, c] : b.terms_) r.add_term(s, c);
    return r;
}

MultiDiffOp operator-(const MultiDiffOp& a, const MultiDiffOp& b) { return a + (-b); }

MultiDiffOp MultiDiffOp::scaled(const Rational& c) const {
    MultiDiffOp r(dim_, arity_, value_);
    if (c.is_zero()) return r;
    for (const auto& [s, f] : terms_) r.terms_.emplace(s, f.scaled(c));
    return r;
}

bool operator==(const MultiDiffOp& a, const MultiDiffOp& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.arity_ == b.arity_ && a.value_ == b.value_ && a.terms_ == b.terms_;
}

MultiDiffOp MultiDiffOp::without_term(size_t k) const {
    MultiDiffOp r(dim_, arity_, value_);
    size_t i = 0;
    for (const auto& [s, c] : terms_) {
        if (i++ == k) continue;
        r.terms_.emplace(s, c);
    }
    return r;
}

std::string MultiDiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")[";
        for (size_t j = 0; j < s.size(); ++j) {
            if (j) os << "|";
            bool any = false;
            for (size_t i = 0; i < s[j].size(); ++i)
                for (int k = 0; k < s[j][i]; ++k) {
                    os << "d" << (i + 1);
                    any = true;
                }
            if (!any) os << "1";
        }
        os << "]";
        if (value_ == Value::TopForm) os << " w";
    }
    return os.str();
}

MultiDiffOp insert_at(const MultiDiffOp& phi, int i, const MultiDiffOp& psi) {
    int p = phi.arity(), q = psi.arity();
    if (i < 1 || i > p) throw std::invalid_argument("insert_at: position out of range");
    MultiDiffOp r(phi.dim(), p + q - 1, phi.value_kind());
    for (const auto& [sa, ca] : phi.terms())
        for (const auto& [sb, cb] : psi.terms()) {
            const MultiIdx& alpha = sa[static_cast<size_t>(i - 1)];
            // d^alpha hits the inner coefficient and the inner q arguments
            std::vector<MultiIdx> acc;
            distribute(alpha, q + 1, acc, Rational(1),
                       [&](const std::vector<MultiIdx>& parts, const Rational& mult) {
                           LaurentPoly coef = ca * apply_partial(cb, parts[0]);
                           if (coef.is_zero()) return;
                           Slots s;
                           s.reserve(static_cast<size_t>(p + q - 1));
                           for (int j = 0; j < i - 1; ++j) s.push_back(sa[static_cast<size_t>(j)]);
                           for (int j = 0; j < q; ++j)
                               s.push_back(midx_add(sb[static_cast<size_t>(j)], parts[static_cast<size_t>(j + 1)]));
                           for (int j = i; j < p; ++j) s.push_back(sa[static_cast<size_t>(j)]);
                           r.add_term(s, coef.scaled(mult));
                       });
        }
    return r;
}

MultiDiffOp braces(const MultiDiffOp& phi, const MultiDiffOp& psi) {
    int p = phi.arity(), q = psi.arity();
    MultiDiffOp r(phi.dim(), p + q - 1, phi.value_kind());
    for (int i = 1; i <= p; ++i) {
        MultiDiffOp ins = insert_at(phi, i, psi);
        r = r + ins.scaled(Rational(sign_of_parity(static_cast<long>(i - 1) * (q - 1))));
    }
    return r;
}

MultiDiffOp gerstenhaber(const MultiDiffOp& phi, const MultiDiffOp& psi) {
    if (phi.value_kind() != MultiDiffOp::Value::Scalar ||
        psi.value_kind() != MultiDiffOp::Value::Scalar)
        throw std::invalid_argument("gerstenhaber: scalar-valued operators required");
    int p = phi.arity(), q = psi.arity();
    MultiDiffOp r = braces(phi, psi);
    MultiDiffOp s = braces(psi, phi);
    return r - s.scaled(Rational(sign_of_parity(static_cast<long>(p - 1) * (q - 1))));
}

MultiDiffOp cochain_differential(const MultiDiffOp& phi) {
    if (phi.is_zero()) return MultiDiffOp(phi.dim(), phi.arity() + 1, phi.value_kind());
    return gerstenhaber(MultiDiffOp::multiplication(phi.dim()), phi);
}

MultiDiffOp cochain_differential_valued(const MultiDiffOp& phi) {
    int p = phi.arity();
    int dim = phi.dim();
    MultiDiffOp r(dim, p + 1, phi.value_kind());
    for (const auto& [s, c] : phi.terms()) {
        // a_1 phi(a_2,...,a_{p+1})
        {
            Slots t;
            t.push_back(midx_zero(dim));
            t.insert(t.end(), s.begin(), s.end());
            r.add_term(t, c);
        }
        // (-1)^i phi(a_1,...,a_i a_{i+1},...,a_{p+1})
        for (int i = 1; i <= p; ++i) {
            const MultiIdx& alpha = s[static_cast<size_t>(i - 1)];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                Slots t;
                for (int j = 0; j < i - 1; ++j) t.push_back(s[static_cast<size_t>(j)]);
                t.push_back(mu);
                t.push_back(rest);
                for (int j = i; j < p; ++j) t.push_back(s[static_cast<size_t>(j)]);
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational(i % 2 ? -1 : 1)));
            }
        }
        // (-1)^{p+1} phi(a_1,...,a_p) a_{p+1}
        {
            Slots t(s);
            t.push_back(midx_zero(dim));
            r.add_term(t, c.scaled(Rational((p + 1) % 2 ? -1 : 1)));
        }
    }
    return r;
}

// ---- HochChain ----

HochChain HochChain::elementary(int dim, const std::vector<LaurentPoly>& entries) {
    HochChain r(dim);
    if (entries.empty()) return r;
    // expand multilinearly into monomial tensors
    std::vector<std::pair<Key, Rational>> acc{{Key{}, Rational(1)}};
    for (const auto& e : entries) {
        std::vector<std::pair<Key, Rational>> next;
        for (const auto& [key, c] : acc)
            for (const auto& [exp, coef] : e.terms()) {
                Key k = key;
                k.push_back(exp);
                next.emplace_back(std::move(k), c * coef);
            }
        acc = std::move(next);
    }
    for (const auto& [key, c] : acc) r.add_term(key, c);
    return r;
}

std::optional<int> HochChain::degree() const {
    std::optional<int> deg;
    for (const auto& [k, c] : terms_) {
        int d = -(static_cast<int>(k.size()) - 1);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

void HochChain::add_term(const Key& k, const Rational& c) {
    if (c.is_zero() || k.empty()) return;
    if (dim_ < 0 && !k.empty()) dim_ = static_cast<int>(k[0].size());
    // slots 1..n carry classes in A/Q*1: constants vanish
    for (size_t j = 1; j < k.size(); ++j) {
        bool zero = true;
        for (int x : k[j])
            if (x) { zero = false; break; }
        if (zero) return;
    }
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HochChain HochChain::operator-() const {
    HochChain r(dim_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

HochChain operator+(const HochChain& a, const HochChain& b) {
    HochChain r = a;
    if (r.dim_ < 0) r.dim_ = b.dim_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

HochChain operator-(const HochChain& a, const HochChain& b) { return a + (-b); }

HochChain HochChain::scaled(const Rational& c) const {
    HochChain r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool operator==(const HochChain& a, const HochChain& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_;
}

HochChain HochChain::without_term(size_t k) const {
    HochChain r(dim_);
    size_t i = 0;
    for (const auto& [key, c] : terms_) {
        if (i++ == k) continue;
        r.terms_.emplace(key, c);
    }
    return r;
}

std::string HochChain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (!mag.is_one()) os << mag.str() << " * ";
        for (size_t j = 0; j < k.size(); ++j) {
            if (j) os << " (x) ";
            bool zero = true;
            for (int x : k[j])
                if (x) { zero = false; break; }
            os << (zero ? "1" : exp_str(k[j]));
        }
    }
    return os.str();
}

HochChain chain_boundary(const HochChain& c) {
    HochChain r(c.dim());
    for (const auto& [k, coef] : c.terms()) {
        int n = static_cast<int>(k.size()) - 1;
        if (n == 0) continue;
        for (int i = 0; i < n; ++i) {
            HochChain::Key t;
            for (int j = 0; j <= n; ++j) {
                if (j == i) {
                    t.push_back(exp_add(k[static_cast<size_t>(i)], k[static_cast<size_t>(i + 1)]));
                    ++j; // skip i+1
                } else {
                    t.push_back(k[static_cast<size_t>(j)]);
                }
            }
            r.add_term(t, coef * Rational(i % 2 ? -1 : 1));
        }
        // (-1)^n a_n a_0 (x) a_1 ... a_{n-1}
        HochChain::Key t;
        t.push_back(exp_add(k[static_cast<size_t>(n)], k[0]));
        for (int j = 1; j < n; ++j) t.push_back(k[static_cast<size_t>(j)]);
        r.add_term(t, coef * Rational(n % 2 ? -1 : 1));
    }
    return r;
}

HochChain connes_B(const HochChain& c) {
    HochChain r(c.dim());
    for (const auto& [k, coef] : c.terms()) {
        int n = static_cast<int>(k.size()) - 1;
        for (int j = 0; j <= n; ++j) {
            HochChain::Key t;
            t.push_back(exp_zero(c.dim()));
            for (int s = 0; s <= n; ++s) t.push_back(k[static_cast<size_t>((j + s) % (n + 1))]);
            r.add_term(t, coef * Rational((j * n) % 2 ? -1 : 1));
        }
    }
    return r;
}

HochChain cochain_action(const MultiDiffOp& d, const HochChain& c) {
    if (d.value_kind() != MultiDiffOp::Value::Scalar)
        throw std::invalid_argument("cochain_action: scalar-valued cochain required");
    int m = d.arity();
    HochChain r(c.dim());
    for (const auto& [k, coef] : c.terms()) {
        int n = static_cast<int>(k.size()) - 1;
        if (m > n + 1) continue;
        auto mono = [&](int idx) {
            return LaurentPoly::monomial(c.dim(), k[static_cast<size_t>(idx)], Rational(1));
        };
        // wrap-around terms: the value lands in slot 0
        for (int j = n - m + 1; j <= n; ++j) {
            std::vector<LaurentPoly> args;
            args.reserve(static_cast<size_t>(m));
            for (int s = 1; s <= m; ++s) args.push_back(mono((j + s) % (n + 1)));
            LaurentPoly val = d.apply(args);
            if (val.is_zero()) continue;
            int sgn = (static_cast<long>(n) * (j + 1)) % 2 ? -1 : 1;
            for (const auto& [e, vc] : val.terms()) {
                HochChain::Key t;
                t.push_back(e);
                for (int s = m + j - n; s <= j; ++s) t.push_back(k[static_cast<size_t>(s)]);
                r.add_term(t, coef * vc * Rational(sgn));
            }
        }
        // interior insertions
        for (int i = 0; i + m <= n; ++i) {
            std::vector<LaurentPoly> args;
            args.reserve(static_cast<size_t>(m));
            for (int s = i + 1; s <= i + m; ++s) args.push_back(mono(s));
            LaurentPoly val = d.apply(args);
            if (val.is_zero()) continue;
            int sgn = (static_cast<long>(m - 1) * (i + 1)) % 2 ? -1 : 1;
            for (const auto& [e, vc] : val.terms()) {
                HochChain::Key t;
                for (int s = 0; s <= i; ++s) t.push_back(k[static_cast<size_t>(s)]);
                t.push_back(e);
                for (int s = i + m + 1; s <= n; ++s) t.push_back(k[static_cast<size_t>(s)]);
                r.add_term(t, coef * vc * Rational(sgn));
            }
        }
    }
    return r;
}

DiffForm hkr_chains(const HochChain& c) {
    DiffForm r(c.dim());
    for (const auto& [k, coef] : c.terms()) {
        int n = static_cast<int>(k.size()) - 1;
        DiffForm form = DiffForm::from_poly(
            LaurentPoly::monomial(c.dim(), k[0], coef / Rational::factorial(n)));
        for (int j = 1; j <= n && !form.is_zero(); ++j)
            form = wedge_form(form, de_rham(DiffForm::from_poly(
                                        LaurentPoly::monomial(c.dim(), k[static_cast<size_t>(j)], Rational(1)))));
        r += form;
    }
    return r;
}

Rational pair_cochain_chain(const MultiDiffOp& phi, const HochChain& c) {
    if (phi.value_kind() != MultiDiffOp::Value::TopForm)
        throw std::invalid_argument("pair_cochain_chain: top-form valued cochain required");
    Rational out(0);
    for (const auto& [k, coef] : c.terms()) {
        int n = static_cast<int>(k.size()) - 1;
        if (n != phi.arity()) continue; // zero on arity mismatch
        std::vector<LaurentPoly> args;
        for (int j = 1; j <= n; ++j)
            args.push_back(LaurentPoly::monomial(c.dim(), k[static_cast<size_t>(j)], Rational(1)));
        DiffForm val = phi.apply_form(args).scaled_poly(
            LaurentPoly::monomial(c.dim(), k[0], Rational(1)));
        out += residue_integral(val) * coef;
    }
    return out;
}

USeries<Rational> pair_cochain_chain(const MultiDiffOp& phi, const UHochChain& c) {
    return c.map([&](const HochChain& x) { return pair_cochain_chain(phi, x); });
}

} // namespace cychains
