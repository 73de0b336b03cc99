#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qjet/scalar.hpp"

namespace qjet {

using ScalarVec = std::vector<Scalar>;

// Dense matrix over the Scalar field; row major. Sized for the word
// spaces that occur here (dimension a few hundred at most), so plain
// Gaussian elimination is the right tool.
class ScalarMat {
  public:
    ScalarMat() : rows_(0), cols_(0) {}
    ScalarMat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero()) {}

    static ScalarMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ScalarMat operator*(const ScalarMat& o) const;
    ScalarMat operator+(const ScalarMat& o) const;
    ScalarMat operator-(const ScalarMat& o) const;
    bool operator==(const ScalarMat& o) const;
    bool is_zero() const;

    void append_rows(const ScalarMat& o);

    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Reduced row echelon form computed in place; returns pivot columns.
std::vector<size_t> rref(ScalarMat& m);

size_t rank(ScalarMat m);

// Echelonized basis of the null space {x : m x = 0}; each basis vector is
// normalized with a unit pivot in a free column. Deterministic.
std::vector<ScalarVec> kernel_basis(const ScalarMat& m);

// Echelonized basis of the column space, as an RREF of the transpose
// (i.e. row space of m^T). Used to materialize images of operators.
std::vector<ScalarVec> image_basis(const ScalarMat& m);

// Particular solution of m x = rhs with free variables set to zero, or
// nullopt if inconsistent. Deterministic (first-pivot rule).
std::optional<ScalarVec> solve(const ScalarMat& m, const ScalarVec& rhs);

// Characteristic polynomial coefficients c_0..c_n of det(xI - m)
// (monic: c_n = 1), by the Faddeev-LeVerrier recursion.
std::vector<Scalar> char_poly(const ScalarMat& m);

struct EigenValue {
    Cyclotomic value;
    unsigned multiplicity;
};

// Exact eigenvalues with multiplicities. Requires the characteristic
// polynomial to split over a cyclotomic field with parameter-free roots;
// throws NonSplitCharPoly otherwise (with the stuck factor). Roots are
// located numerically then verified and divided out exactly.
// field_order widens the search field beyond what the entries mention.
std::vector<EigenValue> eigenvalues(const ScalarMat& m, unsigned field_order = 1,
                                    uint64_t seed = 12345);

}  // namespace qjet
