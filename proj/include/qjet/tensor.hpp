#pragma once

#include "qjet/algebra.hpp"

namespace qjet {

// Element of Omega^{1 (x)_A k} in left-coefficient normal form: a map
// word -> algebra coefficient, where words run over basis-1-form indices.
// Degree 0 is a bare algebra element keyed by the empty word.
struct TensorForm {
    int degree = 0;
    std::map<Word, AlgebraElement> terms;

    static TensorForm of_algebra(const AlgebraElement& a) {
        TensorForm t;
        t.degree = 0;
        if (!a.is_zero()) t.terms.emplace(Word(), a);
        return t;
    }
    static TensorForm basis_word(const Word& w, const AlgebraElement& coeff) {
        TensorForm t;
        t.degree = static_cast<int>(w.size());
        if (!coeff.is_zero()) t.terms.emplace(w, coeff);
        return t;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const AlgebraElement& c);
    TensorForm operator+(const TensorForm& o) const;
    TensorForm operator-(const TensorForm& o) const;
    TensorForm operator-() const;
    TensorForm scaled(const Scalar& c) const;
    bool operator==(const TensorForm& o) const {
        return degree == o.degree ? terms == o.terms : is_zero() && o.is_zero();
    }
};

// All words of a given length over indices 0..dim-1, in lexicographic order.
std::vector<Word> words_of(size_t dim, size_t length);
size_t word_index(const Word& w, size_t dim);

// Scalar-coefficient linear map on word spaces (sigma, wedge stacks,
// braided binomials). Left A-module map: algebra coefficients pass
// through unchanged.
class ScalarTensorMap {
  public:
    ScalarTensorMap() = default;
    ScalarTensorMap(size_t dim, int src_degree, int dst_degree)
        : dim_(dim), src_(src_degree), dst_(dst_degree) {}

    static ScalarTensorMap identity(size_t dim, int degree);
    // from a table on length-2 words: entries[(i,j)] = list of ((k,l), scalar)
    static ScalarTensorMap from_degree2_table(
        size_t dim, const std::map<Word, std::vector<std::pair<Word, Scalar>>>& table);
    // sigma embedded at tensor slots (slot, slot+1) of a degree-k space, 1-based
    static ScalarTensorMap embed_at(const ScalarTensorMap& sigma2, int slot, int degree);

    size_t dim() const { return dim_; }
    int src_degree() const { return src_; }
    int dst_degree() const { return dst_; }

    void set_column(const Word& w, std::vector<std::pair<Word, Scalar>> images);
    std::vector<std::pair<Word, Scalar>> column(const Word& w) const;

    TensorForm apply(const TensorForm& t) const;
    // this after other
    ScalarTensorMap compose(const ScalarTensorMap& other) const;
    ScalarTensorMap operator+(const ScalarTensorMap& o) const;
    ScalarTensorMap operator-(const ScalarTensorMap& o) const;
    ScalarTensorMap scaled(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const ScalarTensorMap& o) const;
    // first word whose column differs from `o`, for witnesses
    std::optional<Word> first_difference(const ScalarTensorMap& o) const;

    // dense matrix, rows/cols indexed by lexicographic word order
    std::vector<std::vector<Scalar>> to_rows() const;

  private:
    size_t dim_ = 0;
    int src_ = 0, dst_ = 0;
    std::map<Word, std::map<Word, Scalar>> cols_;
};

}  // namespace qjet
