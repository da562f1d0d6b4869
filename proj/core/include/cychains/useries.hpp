#pragma once

#include "cychains/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cychains {

// Truncated formal power series in u (u has degree +2). coeff(j) is the
// coefficient of u^j; everything above ucap is unknown. Binary operations
// truncate to the smaller cap, so "equal" always means equal modulo
// u^{min(cap)+1}.
template <class X>
class USeries {
public:
    USeries() : ucap_(-1) {}
    explicit USeries(int ucap) : ucap_(ucap), c_(static_cast<size_t>(ucap) + 1) {
        if (ucap < 0) throw std::invalid_argument("USeries: negative cap");
    }
    USeries(int ucap, std::vector<X> coeffs) : ucap_(ucap), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(ucap) + 1)
            throw std::invalid_argument("USeries: coefficient count != ucap+1");
    }

    static USeries zero(int ucap) { return USeries(ucap); }
    static USeries embed(int ucap, const X& x0, int upower = 0) {
        USeries s(ucap);
        if (upower <= ucap) s.c_[static_cast<size_t>(upower)] = x0;
        return s;
    }

    // a series with cap -1 carries no information; it compares equal to anything
    bool is_everywhere_unknown() const { return ucap_ < 0; }
    int ucap() const { return ucap_; }
    const X& coeff(int j) const { return c_[static_cast<size_t>(j)]; }
    X& coeff(int j) { return c_[static_cast<size_t>(j)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    USeries truncated(int cap) const {
        if (ucap_ < 0 || cap >= ucap_) return *this;
        if (cap < 0) return USeries();
        USeries r(cap);
        for (int j = 0; j <= cap; ++j) r.c_[static_cast<size_t>(j)] = c_[static_cast<size_t>(j)];
        return r;
    }

    USeries operator-() const {
        USeries r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        if (a.ucap_ < 0) return b;
        if (b.ucap_ < 0) return a;
        int cap = std::min(a.ucap_, b.ucap_);
        USeries r(cap);
        for (int j = 0; j <= cap; ++j)
            r.c_[static_cast<size_t>(j)] = a.c_[static_cast<size_t>(j)] + b.c_[static_cast<size_t>(j)];
        return r;
    }
    friend USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

    USeries scaled(const Rational& q) const {
        USeries r(*this);
        for (auto& x : r.c_) x = x.scaled(q);
        return r;
    }

    // multiply by u^k (top k coefficients fall off the cap)
    USeries shifted_up(int k) const {
        if (ucap_ < 0) return *this;
        USeries r(ucap_);
        for (int j = 0; j + k <= ucap_; ++j) r.c_[static_cast<size_t>(j + k)] = c_[static_cast<size_t>(j)];
        return r;
    }

    // division by u: requires zero u^0 coefficient, cap drops by one; at
    // cap zero nothing is known about the quotient
    USeries div_u() const {
        if (ucap_ < 0) return *this;
        if (!c_[0].is_zero())
            throw std::domain_error("USeries::div_u: nonzero u^0 coefficient");
        if (ucap_ == 0) return USeries();
        USeries r(ucap_ - 1);
        for (int j = 1; j <= ucap_; ++j) r.c_[static_cast<size_t>(j - 1)] = c_[static_cast<size_t>(j)];
        return r;
    }

    friend bool operator==(const USeries& a, const USeries& b) {
        if (a.ucap_ < 0 || b.ucap_ < 0) return true;
        int cap = std::min(a.ucap_, b.ucap_);
        for (int j = 0; j <= cap; ++j)
            if (!(a.c_[static_cast<size_t>(j)] == b.c_[static_cast<size_t>(j)])) return false;
        return true;
    }
    friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

    template <class F>
    auto map(F&& f) const -> USeries<decltype(f(std::declval<const X&>()))> {
        using Y = decltype(f(std::declval<const X&>()));
        if (ucap_ < 0) return USeries<Y>();
        USeries<Y> r(ucap_);
        for (int j = 0; j <= ucap_; ++j) r.coeff(j) = f(c_[static_cast<size_t>(j)]);
        return r;
    }

    size_t term_count() const {
        size_t n = 0;
        for (const auto& x : c_) n += x.term_count();
        return n;
    }
    USeries without_term(size_t k) const {
        USeries r(*this);
        for (auto& x : r.c_) {
            size_t n = x.term_count();
            if (k < n) {
                x = x.without_term(k);
                break;
            }
            k -= n;
        }
        return r;
    }

    std::string str() const {
        if (ucap_ < 0) return "(unknown)";
        std::ostringstream os;
        bool first = true;
        for (int j = 0; j <= ucap_; ++j) {
            if (c_[static_cast<size_t>(j)].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (j == 0)
                os << c_[static_cast<size_t>(j)].str();
            else if (j == 1)
                os << "u*(" << c_[static_cast<size_t>(j)].str() << ")";
            else
                os << "u^" << j << "*(" << c_[static_cast<size_t>(j)].str() << ")";
        }
        return first ? "0" : os.str();
    }

private:
    int ucap_;
    std::vector<X> c_;
};

// u-bilinear extension of a product: f maps (X, Y) to Z
template <class X, class Y, class F>
auto useries_convolve(const USeries<X>& a, const USeries<Y>& b, F&& f)
    -> USeries<decltype(f(std::declval<const X&>(), std::declval<const Y&>()))> {
    using Z = decltype(f(std::declval<const X&>(), std::declval<const Y&>()));
    if (a.ucap() < 0 || b.ucap() < 0) return USeries<Z>();
    int cap = std::min(a.ucap(), b.ucap());
    USeries<Z> r(cap);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) {
            if (a.coeff(i).is_zero() || b.coeff(j).is_zero()) continue;
            Z z = f(a.coeff(i), b.coeff(j));
            r.coeff(i + j) = r.coeff(i + j) + z;
        }
    return r;
}

} // namespace cychains
