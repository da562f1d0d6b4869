#include "cychains/symbol.hpp"

#include <algorithm>
#include <sstream>

namespace cychains {

void SymbolElement::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    if (dim_ < 0) dim_ = static_cast<int>(k.sym.size());
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolElement SymbolElement::operator-() const {
    SymbolElement r(dim_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

SymbolElement operator+(const SymbolElement& a, const SymbolElement& b) {
    SymbolElement r = a;
    if (r.dim_ < 0) r.dim_ = b.dim_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

SymbolElement operator-(const SymbolElement& a, const SymbolElement& b) { return a + (-b); }

SymbolElement SymbolElement::scaled(const Rational& c) const {
    SymbolElement r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool operator==(const SymbolElement& a, const SymbolElement& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_;
}

SymbolElement SymbolElement::without_term(size_t k) const {
    SymbolElement r(dim_);
    size_t i = 0;
    for (const auto& [key, c] : terms_) {
        if (i++ == k) continue;
        r.terms_.emplace(key, c);
    }
    return r;
}

std::string SymbolElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k.wedge) os << " * " << mask_str(k.wedge, "dx");
        bool any = false;
        for (size_t i = 0; i < k.sym.size(); ++i)
            for (int x = 0; x < k.sym[i]; ++x) {
                os << (any ? "*" : " * ") << "x" << (i + 1);
                any = true;
            }
    }
    return os.str();
}

SymbolElement koszul_symbol_d0(const SymbolElement& s) {
    SymbolElement r(s.dim());
    for (const auto& [k, c] : s.terms())
        for (int i = 1; i <= s.dim(); ++i) {
            Mask bit = Mask(1) << (i - 1);
            if (k.wedge & bit) continue;
            SymbolElement::Key t;
            t.wedge = k.wedge | bit;
            t.sym = k.sym;
            t.sym[static_cast<size_t>(i - 1)] += 1;
            r.add_term(t, c * Rational(mask_merge_sign(bit, k.wedge)));
        }
    return r;
}

namespace {

void enum_sym(int dim, int q, MultiIdx& cur, int axis, std::vector<MultiIdx>& out) {
    if (axis == dim - 1) {
        cur[static_cast<size_t>(axis)] = q;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= q; ++v) {
        cur[static_cast<size_t>(axis)] = v;
        enum_sym(dim, q - v, cur, axis + 1, out);
    }
}

} // namespace

std::vector<SymbolElement::Key> symbol_basis(int dim, int p, int q) {
    std::vector<SymbolElement::Key> out;
    if (p < 0 || p > dim || q < 0) return out;
    std::vector<MultiIdx> syms;
    MultiIdx cur = midx_zero(dim);
    if (dim == 0) {
        if (q == 0) syms.push_back(cur);
    } else {
        enum_sym(dim, q, cur, 0, syms);
    }
    for (Mask m = 0; m < (Mask(1) << dim); ++m) {
        if (mask_rank(m) != p) continue;
        for (const auto& s : syms) out.push_back(SymbolElement::Key{m, s});
    }
    return out;
}

std::vector<int> koszul_line_cohomology(int dim, int c, int qmax) {
    int p_min = std::max(0, -c);
    int p_max = std::min(dim, qmax - c);
    std::vector<int> out;
    if (p_max < p_min) return out;

    // bases along the line and the matrices of d_0 between them
    std::vector<std::vector<SymbolElement::Key>> bases;
    for (int p = p_min; p <= p_max; ++p) bases.push_back(symbol_basis(dim, p, p + c));

    std::vector<size_t> ranks; // rank of d_0 : (p) -> (p+1)
    for (int pi = 0; pi + 1 < static_cast<int>(bases.size()); ++pi) {
        const auto& src = bases[static_cast<size_t>(pi)];
        const auto& dst = bases[static_cast<size_t>(pi + 1)];
        std::map<SymbolElement::Key, size_t> index;
        for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
        RationalMatrix m(dst.size(), src.size());
        for (size_t j = 0; j < src.size(); ++j) {
            SymbolElement e(dim);
            e.add_term(src[j], Rational(1));
            SymbolElement img = koszul_symbol_d0(e);
            for (const auto& [k, v] : img.terms()) {
                auto it = index.find(k);
                if (it != index.end()) m.at(it->second, j) = v;
            }
        }
        ranks.push_back(m.rank());
    }

    for (int pi = 0; pi < static_cast<int>(bases.size()); ++pi) {
        size_t dim_p = bases[static_cast<size_t>(pi)].size();
        size_t rank_out = (pi < static_cast<int>(ranks.size())) ? ranks[static_cast<size_t>(pi)] : 0;
        size_t rank_in = (pi > 0) ? ranks[static_cast<size_t>(pi - 1)] : 0;
        // top of the line inside the ambient (p <= dim) but truncated by qmax:
        // outgoing map exists unless p = dim
        if (pi == static_cast<int>(bases.size()) - 1 && p_min + pi < dim) {
            // the line continues past qmax; compute the outgoing rank anyway
            const auto& src = bases[static_cast<size_t>(pi)];
            auto dst = symbol_basis(dim, p_min + pi + 1, p_min + pi + 1 + c);
            std::map<SymbolElement::Key, size_t> index;
            for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
            RationalMatrix m(dst.size(), src.size());
            for (size_t j = 0; j < src.size(); ++j) {
                SymbolElement e(dim);
                e.add_term(src[j], Rational(1));
                SymbolElement img = koszul_symbol_d0(e);
                for (const auto& [k, v] : img.terms()) {
                    auto it = index.find(k);
                    if (it != index.end()) m.at(it->second, j) = v;
                }
            }
            rank_out = m.rank();
        }
        out.push_back(static_cast<int>(dim_p - rank_out - rank_in));
    }
    return out;
}

} // namespace cychains
