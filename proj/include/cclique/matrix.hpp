#pragma once

#include <stdexcept>
#include <vector>

#include "cclique/semiring.hpp"

namespace cclique {

/// Square matrix over a semiring instance. The instance travels with the
/// matrix so per-element word sizes and ring parameters stay attached.
template <class SR>
class SrMatrix {
public:
    using value_type = typename SR::value_type;

    SrMatrix(SR sr, int n) : sr_(sr), n_(n), a_(static_cast<std::size_t>(n) * n, sr.zero()) {
        if (n < 0) throw std::invalid_argument("SrMatrix: negative dimension");
    }

    static SrMatrix identity(SR sr, int n) {
        SrMatrix m(sr, n);
        for (int i = 0; i < n; ++i) m(i, i) = sr.one();
        return m;
    }

    int n() const { return n_; }
    const SR& sr() const { return sr_; }

    value_type& operator()(int u, int v) { return a_[static_cast<std::size_t>(u) * n_ + v]; }
    const value_type& operator()(int u, int v) const {
        return a_[static_cast<std::size_t>(u) * n_ + v];
    }

    friend bool operator==(const SrMatrix& x, const SrMatrix& y) {
        if (x.n_ != y.n_ || x.sr_.tag() != y.sr_.tag()) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!x.sr_.eq(x.a_[i], y.a_[i])) return false;
        return true;
    }

private:
    SR sr_;
    int n_;
    std::vector<value_type> a_;
};

template <class SR>
void require_compatible(const SrMatrix<SR>& s, const SrMatrix<SR>& t) {
    if (s.n() != t.n()) throw std::invalid_argument("matrix dimension mismatch");
    if (s.sr().tag() != t.sr().tag()) throw std::invalid_argument("semiring mismatch");
}

/// Centralized naive product; the correctness oracle every distributed
/// multiplication is tested against.
template <class SR>
SrMatrix<SR> mat_mul_oracle(const SrMatrix<SR>& s, const SrMatrix<SR>& t) {
    require_compatible(s, t);
    const SR& sr = s.sr();
    const int n = s.n();
    SrMatrix<SR> p(sr, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            auto acc = sr.acc_make();
            for (int w = 0; w < n; ++w) sr.acc_addmul(acc, s(u, w), t(w, v));
            p(u, v) = sr.acc_value(acc);
        }
    return p;
}

template <class SR>
SrMatrix<SR> mat_add(const SrMatrix<SR>& s, const SrMatrix<SR>& t) {
    require_compatible(s, t);
    SrMatrix<SR> r(s.sr(), s.n());
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) r(u, v) = s.sr().add(s(u, v), t(u, v));
    return r;
}

/// Sum of the diagonal under the semiring addition.
template <class SR>
typename SR::value_type trace(const SrMatrix<SR>& s) {
    auto acc = s.sr().acc_make();
    for (int i = 0; i < s.n(); ++i) s.sr().acc_add(acc, s(i, i));
    return s.sr().acc_value(acc);
}

/// Min-plus to polynomial-ring embedding: finite entry w becomes X^w, an
/// infinite entry becomes the zero polynomial. Finite entries must lie in
/// {0, ..., M}.
inline SrMatrix<TruncPolyRing> poly_embed(const SrMatrix<MinPlusSR>& s, int bound_m) {
    TruncPolyRing ring(bound_m);
    SrMatrix<TruncPolyRing> r(ring, s.n());
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) {
            Weight w = s(u, v);
            if (w.is_inf()) continue;
            if (w.value() < 0) throw std::invalid_argument("poly_embed: negative entry");
            if (w.value() > bound_m) throw std::invalid_argument("poly_embed: entry above M");
            r(u, v) = Poly::monomial(static_cast<int>(w.value()));
        }
    return r;
}

/// Inverse direction of the embedding: the degree of the lowest-degree
/// monomial, or infinity for the zero polynomial.
inline SrMatrix<MinPlusSR> poly_extract(const SrMatrix<TruncPolyRing>& p) {
    SrMatrix<MinPlusSR> r(MinPlusSR{}, p.n());
    for (int u = 0; u < p.n(); ++u)
        for (int v = 0; v < p.n(); ++v) {
            int d = p(u, v).min_degree();
            r(u, v) = d < 0 ? Weight::inf() : Weight(d);
        }
    return r;
}

}  // namespace cclique
