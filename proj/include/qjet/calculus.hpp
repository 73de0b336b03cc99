#pragma once

#include <optional>

#include "qjet/linalg.hpp"
#include "qjet/tensor.hpp"

namespace qjet {

// Element of Lambda^2 (x) Omega^{1 (x) m}: coordinates over the pivot
// complement basis of the degree-2 relations, tensor a tail word, with
// algebra coefficients kept on the left.
struct Lambda2Tensor {
    int tail_degree = 0;
    std::map<std::pair<size_t, Word>, AlgebraElement> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(size_t lambda_index, const Word& tail, const AlgebraElement& c);
    Lambda2Tensor operator+(const Lambda2Tensor& o) const;
    Lambda2Tensor operator-(const Lambda2Tensor& o) const;
    bool operator==(const Lambda2Tensor& o) const { return terms == o.terms; }
    std::string first_term_str() const;
};

// First-order differential calculus with a free left basis {e^i},
// commutation automorphisms e^i a = phi_i(a) e^i, the exterior square,
// the differential, and optional inner form theta.
class Calculus {
  public:
    struct Spec {
        std::shared_ptr<const Algebra> algebra;
        std::vector<std::string> basis_names;
        std::vector<Endomorphism> comm_auto;     // phi_i per basis 1-form
        std::vector<TensorForm> d_gen;           // d of generator/basis element i
        std::vector<ScalarVec> lambda2_relations;  // degree-2 vectors spanning ker wedge
        // d e^i as coefficients over length-2 words; reduced to Lambda2 on load
        std::vector<TensorForm> d_basis;
        std::optional<TensorForm> theta;
    };

    explicit Calculus(Spec spec);

    const Algebra& algebra() const { return *spec_.algebra; }
    std::shared_ptr<const Algebra> algebra_ptr() const { return spec_.algebra; }
    size_t dim() const { return spec_.basis_names.size(); }
    const std::vector<std::string>& basis_names() const { return spec_.basis_names; }
    const Endomorphism& comm_auto(size_t i) const { return spec_.comm_auto.at(i); }
    const std::optional<TensorForm>& theta() const { return spec_.theta; }
    const std::vector<ScalarVec>& lambda2_relations() const { return spec_.lambda2_relations; }

    // phi_{w_1}(phi_{w_2}(...(a)))
    AlgebraElement move_left(const Word& w, const AlgebraElement& a) const;

    TensorForm tensor_mul(const TensorForm& s, const TensorForm& t) const;
    TensorForm mul_left(const AlgebraElement& a, const TensorForm& t) const;
    TensorForm mul_right(const TensorForm& t, const AlgebraElement& a) const;

    TensorForm differentiate(const AlgebraElement& a) const;
    // d of a formal word, no normal form assumed (used for validation)
    TensorForm d_word(const Word& w) const;

    // exterior square data
    size_t lambda2_rank() const { return lambda2_basis_.size(); }
    const std::vector<Word>& lambda2_basis() const { return lambda2_basis_; }
    std::string lambda2_basis_str(size_t index) const;
    // coordinates of e^i wedge e^j over the Lambda^2 basis
    const std::vector<std::pair<size_t, Scalar>>& wedge_pair(unsigned char i,
                                                             unsigned char j) const;

    // quotient map on a degree-2 tensor
    Lambda2Tensor wedge_reduce(const TensorForm& t) const;
    // wedge slots (slot, slot+1) of a degree-k tensor, 1-based slot
    Lambda2Tensor wedge_at(int slot, const TensorForm& t) const;
    // d applied to the leading 1-form slot: (d (x) id^{k-1})
    Lambda2Tensor d_first(const TensorForm& t) const;
    // d of a 1-form: d(a e^i) = (da) wedge e^i + a d(e^i)
    Lambda2Tensor d_oneform(const TensorForm& t) const;
    const Lambda2Tensor& d_basis(size_t i) const { return d_basis_reduced_.at(i); }

    // the wedge contraction at a slot as a Scalar matrix: rows indexed by
    // (remaining word, lambda2 index) pairs, columns by degree-k words
    ScalarMat wedge_matrix(int slot, int degree) const;

    CheckReport validate() const;

    std::string str(const TensorForm& t) const;
    std::string str(const Lambda2Tensor& t) const;

  private:
    Spec spec_;
    std::vector<Word> lambda2_basis_;  // complement words of the relation echelon
    // full reduction table: word2 -> coords over lambda2_basis_
    std::vector<std::vector<std::pair<size_t, Scalar>>> wedge_table_;
    std::vector<Lambda2Tensor> d_basis_reduced_;
    mutable std::map<Word, TensorForm> diff_cache_;

    void build_lambda2_();
};

}  // namespace qjet
