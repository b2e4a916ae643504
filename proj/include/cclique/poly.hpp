#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cclique {

namespace detail {
inline long long checked_add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("poly coefficient overflow");
    return r;
}
inline long long checked_mul_ll(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("poly coefficient overflow");
    return r;
}
}  // namespace detail

/// Integer polynomial in one variable, kept sparse as (exponent, coefficient)
/// terms sorted by exponent. Degrees above the owning ring's cap are dropped
/// by the ring operations, never here.
class Poly {
public:
    using Term = std::pair<int, long long>;

    Poly() = default;

    static Poly monomial(int exp, long long coef = 1) {
        Poly p;
        if (coef != 0) p.terms_.emplace_back(exp, coef);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Exponent of the lowest-degree term; -1 for the zero polynomial.
    int min_degree() const { return terms_.empty() ? -1 : terms_.front().first; }

    const std::vector<Term>& terms() const { return terms_; }

    long long coefficient(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.first < e; });
        return (it != terms_.end() && it->first == exp) ? it->second : 0;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                long long c = detail::checked_add_ll(a.terms_[i].second, b.terms_[j].second);
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i, ++j;
            }
        }
        return r;
    }

    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly scaled(const Poly& a, long long k) {
        if (k == 0) return Poly();
        Poly r = a;
        for (auto& t : r.terms_) t.second = detail::checked_mul_ll(t.second, k);
        return r;
    }

    /// Product with every exponent above max_degree discarded.
    friend Poly mul_capped(const Poly& a, const Poly& b, int max_degree) {
        std::vector<long long> dense(static_cast<std::size_t>(max_degree) + 1, 0);
        for (const auto& [ea, ca] : a.terms_) {
            if (ea > max_degree) break;
            for (const auto& [eb, cb] : b.terms_) {
                int e = ea + eb;
                if (e > max_degree) break;
                dense[e] = detail::checked_add_ll(dense[e], detail::checked_mul_ll(ca, cb));
            }
        }
        return from_dense(dense);
    }

    static Poly from_dense(const std::vector<long long>& dense) {
        Poly r;
        for (int e = 0; e < static_cast<int>(dense.size()); ++e)
            if (dense[e] != 0) r.terms_.emplace_back(e, dense[e]);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c) + "X^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

}  // namespace cclique
