#include "cychains/multivector.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cychains {

int mask_rank(Mask m) { return std::popcount(m); }

int mask_merge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inversions = 0;
    for (int i = 0; i < 32; ++i) {
        if (!(a >> i)) break;
        if ((a >> i) & 1u) inversions += std::popcount(b & ((1u << i) - 1u));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int mask_remove_sign(Mask j, int i) {
    Mask bit = Mask(1) << (i - 1);
    if (!(j & bit)) throw std::invalid_argument("mask_remove_sign: index not present");
    int pos = std::popcount(j & (bit - 1u)); // 0-based position of i in sorted J
    return pos % 2 == 0 ? 1 : -1;
}

std::string mask_str(Mask m, const char* gen) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if ((m >> i) & 1u) {
            if (!first) os << "^";
            first = false;
            os << gen << (i + 1);
        }
    }
    return os.str();
}

// ---- MultiVector ----

MultiVector MultiVector::from_poly(const LaurentPoly& f) {
    MultiVector r(f.dim());
    r.add_component(0, f);
    return r;
}

MultiVector MultiVector::basis(int dim, Mask I, const LaurentPoly& coef) {
    MultiVector r(dim);
    r.add_component(I, coef);
    return r;
}

LaurentPoly MultiVector::component(Mask I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? LaurentPoly(dim_) : it->second;
}

void MultiVector::add_component(Mask I, const LaurentPoly& f) {
    if (f.is_zero()) return;
    if (dim_ < 0) dim_ = f.dim();
    auto [it, fresh] = comps_.emplace(I, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

std::optional<int> MultiVector::pure_rank() const {
    std::optional<int> r;
    for (const auto& [I, f] : comps_) {
        int rk = mask_rank(I);
        if (r && *r != rk) return std::nullopt;
        r = rk;
    }
    return r;
}

std::optional<int> MultiVector::degree() const {
    auto r = pure_rank();
    if (!r) return std::nullopt;
    return *r - 1;
}

MultiVector MultiVector::operator-() const {
    MultiVector r(dim_);
    for (const auto& [I, f] : comps_) r.comps_.emplace(I, -f);
    return r;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [I, f] : o.comps_) add_component(I, f);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [I, f] : o.comps_) add_component(I, -f);
    return *this;
}

MultiVector MultiVector::scaled(const Rational& c) const {
    MultiVector r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [I, f] : comps_) r.comps_.emplace(I, f.scaled(c));
    return r;
}

MultiVector MultiVector::scaled_poly(const LaurentPoly& g) const {
    MultiVector r(dim_);
    for (const auto& [I, f] : comps_) r.add_component(I, f * g);
    return r;
}

bool operator==(const MultiVector& a, const MultiVector& b) {
    if (a.comps_.empty() && b.comps_.empty()) return true;
    return a.dim_ == b.dim_ && a.comps_ == b.comps_;
}

size_t MultiVector::term_count() const {
    size_t n = 0;
    for (const auto& [I, f] : comps_) n += f.term_count();
    return n;
}

MultiVector MultiVector::without_term(size_t k) const {
    MultiVector r(dim_);
    for (const auto& [I, f] : comps_) {
        size_t n = f.term_count();
        if (k < n) {
            r.add_component(I, f.without_term(k));
            k = static_cast<size_t>(-1); // consumed
        } else {
            r.add_component(I, f);
            if (k != static_cast<size_t>(-1)) k -= n;
        }
    }
    return r;
}

std::string MultiVector::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : comps_) {
        if (!first) os << " + ";
        first = false;
        if (I == 0) {
            os << f.str();
        } else {
            os << "(" << f.str() << ") * " << mask_str(I, "d");
        }
    }
    return os.str();
}

// ---- DiffForm ----

DiffForm DiffForm::from_poly(const LaurentPoly& f) {
    DiffForm r(f.dim());
    r.add_component(0, f);
    return r;
}

DiffForm DiffForm::basis(int dim, Mask I, const LaurentPoly& coef) {
    DiffForm r(dim);
    r.add_component(I, coef);
    return r;
}

LaurentPoly DiffForm::component(Mask I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? LaurentPoly(dim_) : it->second;
}

void DiffForm::add_component(Mask I, const LaurentPoly& f) {
    if (f.is_zero()) return;
    if (dim_ < 0) dim_ = f.dim();
    auto [it, fresh] = comps_.emplace(I, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

std::optional<int> DiffForm::pure_rank() const {
    std::optional<int> r;
    for (const auto& [I, f] : comps_) {
        int rk = mask_rank(I);
        if (r && *r != rk) return std::nullopt;
        r = rk;
    }
    return r;
}

std::optional<int> DiffForm::degree() const {
    auto r = pure_rank();
    if (!r) return std::nullopt;
    return -*r;
}

DiffForm DiffForm::operator-() const {
    DiffForm r(dim_);
    for (const auto& [I, f] : comps_) r.comps_.emplace(I, -f);
    return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [I, f] : o.comps_) add_component(I, f);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [I, f] : o.comps_) add_component(I, -f);
    return *this;
}

DiffForm DiffForm::scaled(const Rational& c) const {
    DiffForm r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [I, f] : comps_) r.comps_.emplace(I, f.scaled(c));
    return r;
}

DiffForm DiffForm::scaled_poly(const LaurentPoly& g) const {
    DiffForm r(dim_);
    for (const auto& [I, f] : comps_) r.add_component(I, f * g);
    return r;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
    if (a.comps_.empty() && b.comps_.empty()) return true;
    return a.dim_ == b.dim_ && a.comps_ == b.comps_;
}

size_t DiffForm::term_count() const {
    size_t n = 0;
    for (const auto& [I, f] : comps_) n += f.term_count();
    return n;
}

DiffForm DiffForm::without_term(size_t k) const {
    DiffForm r(dim_);
    for (const auto& [I, f] : comps_) {
        size_t n = f.term_count();
        if (k < n) {
            r.add_component(I, f.without_term(k));
            k = static_cast<size_t>(-1);
        } else {
            r.add_component(I, f);
            if (k != static_cast<size_t>(-1)) k -= n;
        }
    }
    return r;
}

std::string DiffForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : comps_) {
        if (!first) os << " + ";
        first = false;
        if (I == 0) {
            os << f.str();
        } else {
            os << "(" << f.str() << ") * " << mask_str(I, "dt");
        }
    }
    return os.str();
}

// ---- VolumeForm ----

VolumeForm VolumeForm::standard(int dim) {
    VolumeForm v;
    v.dim = dim;
    v.c = Rational(1);
    v.k = exp_zero(dim);
    return v;
}

VolumeForm VolumeForm::with_density(int dim, const Rational& c, const ExpVec& k) {
    if (c.is_zero()) throw std::invalid_argument("VolumeForm: density unit must be nonzero");
    if (static_cast<int>(k.size()) != dim)
        throw std::invalid_argument("VolumeForm: exponent length != dim");
    VolumeForm v;
    v.dim = dim;
    v.c = c;
    v.k = k;
    return v;
}

LaurentPoly VolumeForm::density_dt() const {
    ExpVec e(k);
    for (auto& x : e) x -= 1;
    return LaurentPoly::monomial(dim, e, c);
}

LaurentPoly VolumeForm::density_std() const { return LaurentPoly::monomial(dim, k, c); }

DiffForm VolumeForm::as_form() const {
    Mask full = (dim >= 32) ? ~Mask(0) : ((Mask(1) << dim) - 1u);
    return DiffForm::basis(dim, full, density_dt());
}

bool operator==(const VolumeForm& a, const VolumeForm& b) {
    return a.dim == b.dim && a.c == b.c && a.k == b.k;
}

std::string VolumeForm::str() const {
    std::ostringstream os;
    if (c.is_one() && k == exp_zero(dim)) return "w_std";
    os << c.str() << " * " << exp_str(k) << " * w_std";
    return os.str();
}

// ---- VTop ----

VTop operator+(const VTop& a, const VTop& b) {
    if (a.mv.is_zero()) return b;
    if (b.mv.is_zero()) return a;
    if (!(a.vol == b.vol)) throw std::invalid_argument("VTop: volume form mismatch");
    return VTop(a.mv + b.mv, a.vol);
}

bool operator==(const VTop& a, const VTop& b) {
    if (a.mv.is_zero() && b.mv.is_zero()) return true;
    return a.vol == b.vol && a.mv == b.mv;
}

std::string VTop::str() const {
    std::ostringstream os;
    os << "(" << mv.str() << ") (x) " << vol.str();
    return os.str();
}

} // namespace cychains
