#pragma once

#include <vector>

namespace cclique {

/// One nonzero coefficient of a bilinear matrix-multiplication scheme.
/// For alpha/beta it scales input entry (i,j) into product w; for lambda it
/// scales product w into output entry (i,j).
struct BilinearTerm {
    int i, j, w;
    long long coef;
};

/// A bilinear algorithm multiplying two d x d matrices with m scalar
/// multiplications, given by sparse coefficient tensors. Construction runs a
/// randomized self-check against the naive product and throws on mismatch.
class BilinearAlgorithm {
public:
    BilinearAlgorithm(int d, int m, std::vector<BilinearTerm> alpha, std::vector<BilinearTerm> beta,
                      std::vector<BilinearTerm> lambda);

    int d() const { return d_; }
    int m() const { return m_; }
    const std::vector<BilinearTerm>& alpha() const { return alpha_; }
    const std::vector<BilinearTerm>& beta() const { return beta_; }
    const std::vector<BilinearTerm>& lambda() const { return lambda_; }

    /// Terms grouped for the two linear-combination steps.
    const std::vector<std::vector<BilinearTerm>>& alpha_by_w() const { return alpha_by_w_; }
    const std::vector<std::vector<BilinearTerm>>& beta_by_w() const { return beta_by_w_; }
    const std::vector<std::vector<BilinearTerm>>& lambda_by_ij() const { return lambda_by_ij_; }

    /// L-fold tensor power of Strassen's <2,2,2;7> scheme: d = 2^L, m = 7^L.
    static BilinearAlgorithm strassen_power(int level);

    /// The <1,1,1;1> scheme; the degenerate fallback when no larger scheme
    /// fits the node count.
    static BilinearAlgorithm trivial();

    /// Largest bundled scheme with m <= n.
    static BilinearAlgorithm for_nodes(int n);

private:
    void self_check() const;

    int d_, m_;
    std::vector<BilinearTerm> alpha_, beta_, lambda_;
    std::vector<std::vector<BilinearTerm>> alpha_by_w_, beta_by_w_, lambda_by_ij_;
};

}  // namespace cclique
