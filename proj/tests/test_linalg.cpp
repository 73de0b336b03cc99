#include "doctest.h"

#include "qjet/linalg.hpp"

using namespace qjet;

namespace {
ScalarMat from_long(const std::vector<std::vector<long>>& rows) {
    ScalarMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("rref rank kernel") {
    ScalarMat m = from_long({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // check m * k == 0
    for (size_t i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero();
        for (size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * ker[0][j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("solve with canonical particular solution") {
    ScalarMat m = from_long({{0, 1, -1, 0}, {0, -1, 1, 0}});
    ScalarVec rhs{Scalar(1), Scalar(-1)};
    auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    // first-pivot rule puts the solution on column 1
    CHECK((*x)[0].is_zero());
    CHECK((*x)[1] == Scalar(1));
    CHECK((*x)[2].is_zero());
    CHECK((*x)[3].is_zero());

    auto none = solve(from_long({{1, 1}, {1, 1}}), ScalarVec{Scalar(0), Scalar(1)});
    CHECK(!none.has_value());
}

TEST_CASE("char poly and eigenvalues over Q") {
    // flip map on 2 letters: words xx, xy, yx, yy -> eigenvalues 1,1,1,-1
    ScalarMat flip(4, 4);
    flip.at(0, 0) = Scalar(1);
    flip.at(2, 1) = Scalar(1);
    flip.at(1, 2) = Scalar(1);
    flip.at(3, 3) = Scalar(1);
    auto ev = eigenvalues(flip);
    REQUIRE(ev.size() == 2);
    // sorted deterministically; check multiset
    bool saw_plus = false, saw_minus = false;
    for (auto& e : ev) {
        if (e.value == Cyclotomic(1)) { CHECK(e.multiplicity == 3); saw_plus = true; }
        if (e.value == Cyclotomic(-1)) { CHECK(e.multiplicity == 1); saw_minus = true; }
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("eigenvalues in a cyclotomic field") {
    // companion-style matrix of x^2 + x + 1 has eigenvalues zeta3, zeta3^2
    ScalarMat m(2, 2);
    m.at(0, 1) = Scalar(-1);
    m.at(1, 0) = Scalar(1);
    m.at(1, 1) = Scalar(-1);
    auto ev = eigenvalues(m, 3);
    REQUIRE(ev.size() == 2);
    Cyclotomic z = Cyclotomic::zeta(3);
    bool a = false, b = false;
    for (auto& e : ev) {
        if (e.value == z) a = true;
        if (e.value == z * z) b = true;
        CHECK(e.multiplicity == 1);
    }
    CHECK(a);
    CHECK(b);
}

TEST_CASE("parametric eigenvalues with constant roots") {
    // upper triangular with parameter off the diagonal: eigenvalues 1, -1
    Scalar lam = Scalar::parameter("lam_eig");
    ScalarMat m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = lam;
    m.at(1, 1) = Scalar(-1);
    auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].multiplicity == 1);
    CHECK(ev[1].multiplicity == 1);
}

TEST_CASE("non split char poly reported") {
    // x^2 - 2 does not split over Q(i)
    ScalarMat m(2, 2);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(1);
    CHECK_THROWS_AS(eigenvalues(m), NonSplitCharPoly);
}
