#include "cychains/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace cychains {

ExpVec exp_zero(int dim) { return ExpVec(static_cast<size_t>(dim), 0); }

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_add: dimension mismatch");
    ExpVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

LaurentPoly LaurentPoly::constant(int dim, const Rational& c) {
    LaurentPoly p(dim);
    p.add_term(exp_zero(dim), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int dim, const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != dim)
        throw std::invalid_argument("LaurentPoly::monomial: exponent length != dim");
    LaurentPoly p(dim);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int dim, int i) {
    if (i < 1 || i > dim) throw std::invalid_argument("LaurentPoly::variable: axis out of range");
    ExpVec e = exp_zero(dim);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(dim, e, Rational(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == exp_zero(dim_);
}

Rational LaurentPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const {
    if (terms_.empty()) return Rational(0);
    return coefficient(exp_zero(dim_));
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    if (dim_ < 0) dim_ = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("LaurentPoly::add_term: dimension mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_dim(const LaurentPoly& o) const {
    if (dim_ >= 0 && o.dim_ >= 0 && dim_ != o.dim_)
        throw std::invalid_argument("LaurentPoly: dimension mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_dim(o);
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_dim(o);
    if (dim_ < 0) dim_ = o.dim_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_dim(b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(std::max(a.dim_, b.dim_));
    LaurentPoly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::partial(int i) const {
    if (dim_ >= 0 && (i < 1 || i > dim_))
        throw std::invalid_argument("LaurentPoly::partial: axis out of range");
    LaurentPoly r(dim_);
    size_t ax = static_cast<size_t>(i - 1);
    for (const auto& [e, c] : terms_) {
        if (e[ax] == 0) continue;
        ExpVec f(e);
        f[ax] -= 1;
        r.add_term(f, c * Rational(e[ax]));
    }
    return r;
}

LaurentPoly LaurentPoly::strip_constant() const {
    if (terms_.empty()) return *this;
    LaurentPoly r(*this);
    r.terms_.erase(exp_zero(dim_));
    return r;
}

LaurentPoly LaurentPoly::without_term(size_t k) const {
    LaurentPoly r(*this);
    if (k >= terms_.size()) return r;
    auto it = r.terms_.begin();
    std::advance(it, static_cast<long>(k));
    r.terms_.erase(it);
    return r;
}

std::string exp_str(const ExpVec& e) {
    std::ostringstream os;
    os << "t^[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << "]";
    return os.str();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool zero_exp = (e == exp_zero(dim_));
        if (zero_exp) {
            os << mag.str();
        } else if (mag.is_one() && c.sign() > 0) {
            os << exp_str(e);
        } else {
            os << mag.str() << " * " << exp_str(e);
        }
    }
    return os.str();
}

} // namespace cychains
