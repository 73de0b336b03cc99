#pragma once

#include "qjet/calculus.hpp"

namespace qjet {

// Braided integers, binomials and factorials built from a degree-2
// braiding with scalar entries, plus Yang-Baxter verification and
// degreewise ranks of the braided-symmetric algebra.
class BraidOperator {
  public:
    BraidOperator() = default;
    BraidOperator(size_t dim, ScalarTensorMap sigma2);

    size_t dim() const { return dim_; }
    const ScalarTensorMap& sigma() const { return sigma2_; }
    // sigma acting on tensor slots (i, i+1) of the degree-k word space
    const ScalarTensorMap& sigma_at(int slot, int degree) const;

    // [n | k, sigma] on the degree-n word space
    const ScalarTensorMap& binomial(int n, int k) const;
    // [n, sigma]! on the degree-n word space
    const ScalarTensorMap& factorial(int n) const;
    // sigma_1 sigma_2 ... sigma_m embedded in degree n (rightmost first)
    const ScalarTensorMap& cascade(int m, int degree) const;

    CheckReport check_ybe() const;
    CheckReport binomial_identity_check(int n, int k, int m) const;

    struct SymData {
        size_t rank;
        std::vector<ScalarVec> kernel;  // echelonized basis of ker [k, sigma]!
    };
    SymData sym_rank_and_kernel(int k) const;

    // Eigenvalues of the degree-2 braiding matrix; field_order widens the
    // cyclotomic field to search for roots in.
    std::vector<EigenValue> eigen_structure(unsigned field_order = 1) const;

  private:
    size_t dim_ = 0;
    ScalarTensorMap sigma2_;
    mutable std::map<std::pair<int, int>, ScalarTensorMap> sigma_at_cache_;
    mutable std::map<std::pair<int, int>, ScalarTensorMap> binomial_cache_;
    mutable std::map<int, ScalarTensorMap> factorial_cache_;
    mutable std::map<std::pair<int, int>, ScalarTensorMap> cascade_cache_;
};

// Validates that a scalar braiding matrix is a bimodule map in the
// automorphism model: for every entry sigma(e^i (x) e^j) containing
// e^k (x) e^l, the composite automorphisms phi_i phi_j and phi_k phi_l
// agree on all algebra generators.
CheckReport validate_braiding_bimodule(const Calculus& calc, const ScalarTensorMap& sigma2);

ScalarMat rows_to_mat(const std::vector<std::vector<Scalar>>& rows);

}  // namespace qjet
