#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "cclique/core.hpp"
#include "cclique/poly.hpp"
#include "cclique/weight.hpp"

namespace cclique {

using BigInt = boost::multiprecision::cpp_int;

/// Boolean semiring (or, and). Values are 0/1 bytes rather than bool so
/// matrices stay plain arrays (addressable, safe to fill concurrently).
struct BooleanSR {
    using value_type = std::uint8_t;
    static constexpr bool is_ring = false;

    std::string tag() const { return "bool"; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const { return a | b; }
    value_type mul(value_type a, value_type b) const { return a & b; }
    bool eq(value_type a, value_type b) const { return a == b; }
    bool is_zero(value_type a) const { return a == 0; }

    int words_per_element() const { return 1; }
    void encode(value_type v, Word* out) const { out[0] = v ? 1 : 0; }
    value_type decode(const Word* in) const { return in[0] != 0 ? 1 : 0; }

    using acc_type = std::uint8_t;
    acc_type acc_make() const { return 0; }
    void acc_addmul(acc_type& acc, value_type a, value_type b) const { acc |= (a & b); }
    void acc_add(acc_type& acc, value_type a) const { acc |= a; }
    value_type acc_value(const acc_type& acc) const { return acc; }
};

/// Min-plus (tropical) semiring with the infinity sentinel as its zero and
/// saturating addition as its multiplication.
struct MinPlusSR {
    using value_type = Weight;
    static constexpr bool is_ring = false;

    std::string tag() const { return "minplus"; }
    Weight zero() const { return Weight::inf(); }
    Weight one() const { return Weight(0); }
    Weight add(Weight a, Weight b) const { return min(a, b); }
    Weight mul(Weight a, Weight b) const { return a + b; }
    bool eq(Weight a, Weight b) const { return a == b; }
    bool is_zero(Weight a) const { return a.is_inf(); }

    int words_per_element() const { return 1; }
    void encode(Weight v, Word* out) const { out[0] = static_cast<Word>(v.raw()); }
    Weight decode(const Word* in) const { return Weight::from_raw(static_cast<long long>(in[0])); }

    using acc_type = Weight;
    acc_type acc_make() const { return Weight::inf(); }
    void acc_addmul(acc_type& acc, Weight a, Weight b) const { acc = min(acc, a + b); }
    void acc_add(acc_type& acc, Weight a) const { acc = min(acc, a); }
    Weight acc_value(const acc_type& acc) const { return acc; }
};

/// Ring of arbitrary-precision integers. words_per_element bounds the encoded
/// size; values that do not fit the configured word budget throw instead of
/// being truncated.
struct IntRing {
    using value_type = BigInt;
    static constexpr bool is_ring = true;

    explicit IntRing(int words = 1) : words_(words) {
        if (words < 1) throw std::invalid_argument("IntRing: words_per_element must be >= 1");
    }

    std::string tag() const { return "int/" + std::to_string(words_); }
    BigInt zero() const { return 0; }
    BigInt one() const { return 1; }
    BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt neg(const BigInt& a) const { return -a; }
    BigInt scale(long long k, const BigInt& a) const { return k * a; }
    bool eq(const BigInt& a, const BigInt& b) const { return a == b; }
    bool is_zero(const BigInt& a) const { return a.is_zero(); }

    int words_per_element() const { return words_; }

    /// Sign-magnitude encoding, 63 magnitude bits per word, sign in the top
    /// bit of the last word.
    void encode(const BigInt& v, Word* out) const {
        BigInt mag = v < 0 ? BigInt(-v) : v;
        for (int i = 0; i < words_; ++i) {
            out[i] = static_cast<Word>(mag & 0x7fffffffffffffffULL);
            mag >>= 63;
        }
        if (!mag.is_zero()) throw std::overflow_error("IntRing: value exceeds word budget");
        if (v < 0) out[words_ - 1] |= 0x8000000000000000ULL;
    }
    BigInt decode(const Word* in) const {
        BigInt mag = 0;
        bool negv = (in[words_ - 1] & 0x8000000000000000ULL) != 0;
        for (int i = words_ - 1; i >= 0; --i) {
            mag <<= 63;
            mag += static_cast<std::uint64_t>(in[i] & 0x7fffffffffffffffULL);
        }
        return negv ? BigInt(-mag) : mag;
    }

    using acc_type = BigInt;
    acc_type acc_make() const { return 0; }
    void acc_addmul(acc_type& acc, const BigInt& a, const BigInt& b) const { acc += a * b; }
    void acc_add(acc_type& acc, const BigInt& a) const { acc += a; }
    BigInt acc_value(const acc_type& acc) const { return acc; }

private:
    int words_;
};

/// Ring of integer polynomials truncated at degree 2M, the target ring of the
/// min-plus embedding. One element costs 2M+1 words: one word per coefficient
/// of the dense representation.
struct TruncPolyRing {
    using value_type = Poly;
    static constexpr bool is_ring = true;

    explicit TruncPolyRing(int bound_m) : m_(bound_m) {
        if (bound_m < 0) throw std::invalid_argument("TruncPolyRing: M must be >= 0");
    }

    int bound() const { return m_; }
    int max_degree() const { return 2 * m_; }

    std::string tag() const { return "polyM=" + std::to_string(m_); }
    Poly zero() const { return Poly(); }
    Poly one() const { return Poly::monomial(0); }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly mul(const Poly& a, const Poly& b) const { return mul_capped(a, b, max_degree()); }
    Poly neg(const Poly& a) const { return -a; }
    Poly scale(long long k, const Poly& a) const { return scaled(a, k); }
    bool eq(const Poly& a, const Poly& b) const { return a == b; }
    bool is_zero(const Poly& a) const { return a.is_zero(); }

    int words_per_element() const { return 2 * m_ + 1; }
    void encode(const Poly& v, Word* out) const {
        for (int e = 0; e <= max_degree(); ++e) out[e] = 0;
        for (const auto& [e, c] : v.terms()) {
            if (e > max_degree()) throw std::invalid_argument("TruncPolyRing: degree above cap");
            out[e] = static_cast<Word>(c);
        }
    }
    Poly decode(const Word* in) const {
        std::vector<long long> dense(static_cast<std::size_t>(max_degree()) + 1);
        for (int e = 0; e <= max_degree(); ++e) dense[e] = static_cast<long long>(in[e]);
        return Poly::from_dense(dense);
    }

    /// Dense coefficient accumulator; monomial-heavy dot products stay cheap.
    using acc_type = std::vector<long long>;
    acc_type acc_make() const { return acc_type(static_cast<std::size_t>(max_degree()) + 1, 0); }
    void acc_addmul(acc_type& acc, const Poly& a, const Poly& b) const {
        for (const auto& [ea, ca] : a.terms()) {
            if (ea > max_degree()) break;
            for (const auto& [eb, cb] : b.terms()) {
                int e = ea + eb;
                if (e > max_degree()) break;
                acc[e] = detail::checked_add_ll(acc[e], detail::checked_mul_ll(ca, cb));
            }
        }
    }
    void acc_add(acc_type& acc, const Poly& a) const {
        for (const auto& [e, c] : a.terms()) acc[e] = detail::checked_add_ll(acc[e], c);
    }
    Poly acc_value(const acc_type& acc) const { return Poly::from_dense(acc); }

private:
    int m_;
};

}  // namespace cclique
