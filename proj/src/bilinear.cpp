#include "cclique/bilinear.hpp"

#include <stdexcept>
#include <string>

#include "cclique/rng.hpp"

namespace cclique {

BilinearAlgorithm::BilinearAlgorithm(int d, int m, std::vector<BilinearTerm> alpha,
                                     std::vector<BilinearTerm> beta, std::vector<BilinearTerm> lambda)
    : d_(d), m_(m), alpha_(std::move(alpha)), beta_(std::move(beta)), lambda_(std::move(lambda)) {
    if (d < 1 || m < 1) throw std::invalid_argument("BilinearAlgorithm: bad dimensions");
    alpha_by_w_.assign(m_, {});
    beta_by_w_.assign(m_, {});
    lambda_by_ij_.assign(static_cast<std::size_t>(d_) * d_, {});
    for (const auto& t : alpha_) alpha_by_w_[t.w].push_back(t);
    for (const auto& t : beta_) beta_by_w_[t.w].push_back(t);
    for (const auto& t : lambda_) lambda_by_ij_[static_cast<std::size_t>(t.i) * d_ + t.j].push_back(t);
    self_check();
}

void BilinearAlgorithm::self_check() const {
    Rng rng(0x1bf52);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<long long> s(static_cast<std::size_t>(d_) * d_), t(s.size());
        for (auto& x : s) x = rng.range(-9, 9);
        for (auto& x : t) x = rng.range(-9, 9);
        std::vector<long long> shat(m_, 0), that(m_, 0);
        for (const auto& a : alpha_) shat[a.w] += a.coef * s[static_cast<std::size_t>(a.i) * d_ + a.j];
        for (const auto& b : beta_) that[b.w] += b.coef * t[static_cast<std::size_t>(b.i) * d_ + b.j];
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                long long got = 0;
                for (const auto& l : lambda_by_ij_[static_cast<std::size_t>(i) * d_ + j])
                    got += l.coef * shat[l.w] * that[l.w];
                long long want = 0;
                for (int k = 0; k < d_; ++k)
                    want += s[static_cast<std::size_t>(i) * d_ + k] * t[static_cast<std::size_t>(k) * d_ + j];
                if (got != want)
                    throw std::logic_error("BilinearAlgorithm self-check failed at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
}

BilinearAlgorithm BilinearAlgorithm::trivial() {
    return BilinearAlgorithm(1, 1, {{0, 0, 0, 1}}, {{0, 0, 0, 1}}, {{0, 0, 0, 1}});
}

namespace {

// Strassen's seven products over 2x2 blocks, zero-indexed.
const std::vector<BilinearTerm> kStrassenAlpha = {
    {0, 0, 0, 1}, {1, 1, 0, 1},   // M0 = (A00 + A11)(B00 + B11)
    {1, 0, 1, 1}, {1, 1, 1, 1},   // M1 = (A10 + A11) B00
    {0, 0, 2, 1},                 // M2 = A00 (B01 - B11)
    {1, 1, 3, 1},                 // M3 = A11 (B10 - B00)
    {0, 0, 4, 1}, {0, 1, 4, 1},   // M4 = (A00 + A01) B11
    {1, 0, 5, 1}, {0, 0, 5, -1},  // M5 = (A10 - A00)(B00 + B01)
    {0, 1, 6, 1}, {1, 1, 6, -1},  // M6 = (A01 - A11)(B10 + B11)
};
const std::vector<BilinearTerm> kStrassenBeta = {
    {0, 0, 0, 1}, {1, 1, 0, 1},
    {0, 0, 1, 1},
    {0, 1, 2, 1}, {1, 1, 2, -1},
    {1, 0, 3, 1}, {0, 0, 3, -1},
    {1, 1, 4, 1},
    {0, 0, 5, 1}, {0, 1, 5, 1},
    {1, 0, 6, 1}, {1, 1, 6, 1},
};
const std::vector<BilinearTerm> kStrassenLambda = {
    {0, 0, 0, 1}, {0, 0, 3, 1}, {0, 0, 4, -1}, {0, 0, 6, 1},  // C00 = M0 + M3 - M4 + M6
    {0, 1, 2, 1}, {0, 1, 4, 1},                                // C01 = M2 + M4
    {1, 0, 1, 1}, {1, 0, 3, 1},                                // C10 = M1 + M3
    {1, 1, 0, 1}, {1, 1, 1, -1}, {1, 1, 2, 1}, {1, 1, 5, 1},   // C11 = M0 - M1 + M2 + M5
};

std::vector<BilinearTerm> tensor_terms(const std::vector<BilinearTerm>& outer,
                                       const std::vector<BilinearTerm>& inner, int d_inner,
                                       int m_inner) {
    std::vector<BilinearTerm> out;
    out.reserve(outer.size() * inner.size());
    for (const auto& a : outer)
        for (const auto& b : inner)
            out.push_back(BilinearTerm{a.i * d_inner + b.i, a.j * d_inner + b.j,
                                       a.w * m_inner + b.w, a.coef * b.coef});
    return out;
}

}  // namespace

BilinearAlgorithm BilinearAlgorithm::strassen_power(int level) {
    if (level < 1) throw std::invalid_argument("strassen_power: level must be >= 1");
    std::vector<BilinearTerm> alpha = kStrassenAlpha, beta = kStrassenBeta, lambda = kStrassenLambda;
    int d = 2, m = 7;
    for (int l = 1; l < level; ++l) {
        alpha = tensor_terms(kStrassenAlpha, alpha, d, m);
        beta = tensor_terms(kStrassenBeta, beta, d, m);
        lambda = tensor_terms(kStrassenLambda, lambda, d, m);
        d *= 2;
        m *= 7;
    }
    return BilinearAlgorithm(d, m, std::move(alpha), std::move(beta), std::move(lambda));
}

BilinearAlgorithm BilinearAlgorithm::for_nodes(int n) {
    int level = 0, m = 1;
    while (m * 7 <= n) {
        m *= 7;
        ++level;
    }
    return level == 0 ? trivial() : strassen_power(level);
}

}  // namespace cclique
