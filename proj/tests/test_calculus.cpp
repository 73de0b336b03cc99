#include "doctest.h"

#include <random>

#include "qjet/fixtures.hpp"

using namespace qjet;

TEST_CASE("M2 calculus validates and differentiates") {
    Fixture f = fixture_m2();
    const Calculus& calc = *f.calculus;
    CHECK(calc.validate().all_passed());

    const Algebra& A = calc.algebra();
    // d E11 = -E12 s + E21 t
    TensorForm d = calc.differentiate(A.generator(0));
    TensorForm expect;
    expect.degree = 1;
    expect.add_term(Word(1, 0), A.generator(1).scaled(Scalar(-1)));
    expect.add_term(Word(1, 1), A.generator(2));
    CHECK(d == expect);
    CHECK(calc.differentiate(A.one()).is_zero());
}

TEST_CASE("M2 exterior square") {
    Fixture f = fixture_m2();
    const Calculus& calc = *f.calculus;
    const Algebra& A = calc.algebra();
    CHECK(calc.lambda2_rank() == 1);

    // s (x) t - t (x) s (the metric g) reduces to zero under wedge
    CHECK(calc.wedge_reduce(f.forms.at("g")).is_zero());

    TensorForm ss;
    ss.degree = 2;
    ss.add_term(Word{0, 0}, A.one());
    CHECK(calc.wedge_reduce(ss).is_zero());

    // d theta = 2 s^t
    Lambda2Tensor dth = calc.d_oneform(f.forms.at("theta"));
    REQUIRE(dth.terms.size() == 1);
    CHECK(dth.terms.begin()->second == A.one().scaled(Scalar(2)));

    // theta^2 = s^t
    Lambda2Tensor th2 = calc.wedge_reduce(
        calc.tensor_mul(f.forms.at("theta"), f.forms.at("theta")));
    REQUIRE(th2.terms.size() == 1);
    CHECK(th2.terms.begin()->second == A.one());
}

TEST_CASE("M2 Leibniz rule on random pairs") {
    Fixture f = fixture_m2();
    const Calculus& calc = *f.calculus;
    const Algebra& A = calc.algebra();
    std::mt19937_64 rng(3);
    auto rand_el = [&]() {
        AlgebraElement e;
        for (int i = 0; i < 4; ++i)
            e = e + A.generator(i).scaled(Scalar(static_cast<long>(rng() % 7) - 3));
        return e;
    };
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement a = rand_el(), b = rand_el();
        TensorForm lhs = calc.differentiate(A.mul(a, b));
        TensorForm rhs =
            calc.mul_left(a, calc.differentiate(b)) + calc.mul_right(calc.differentiate(a), b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("S3 calculus") {
    Fixture f = fixture_s3(true);
    const Calculus& calc = *f.calculus;
    CHECK(calc.validate().all_passed());
    CHECK(calc.lambda2_rank() == 4);

    const Algebra& A = calc.algebra();
    // (e_u)(delta_e e_v) = R_u(delta_e) e_u (x) e_v = delta_u e_u (x) e_v
    TensorForm eu = TensorForm::basis_word(Word(1, 0), A.one());
    TensorForm f_ev = TensorForm::basis_word(Word(1, 1), A.generator(0));
    TensorForm prod = calc.tensor_mul(eu, f_ev);
    TensorForm expect;
    expect.degree = 2;
    expect.add_term(Word{0, 1}, A.generator(1));
    CHECK(prod == expect);

    // d e_u nonzero in Lambda^2
    CHECK(!calc.d_basis(0).is_zero());

    // wedge_1 kills a relation placed in slots (1,2), not in (2,3)
    TensorForm rel;
    rel.degree = 3;
    rel.add_term(Word{0, 1, 0}, A.one());
    rel.add_term(Word{1, 2, 0}, A.one());
    rel.add_term(Word{2, 0, 0}, A.one());
    CHECK(calc.wedge_at(1, rel).is_zero());
    CHECK(!calc.wedge_at(2, rel).is_zero());
}

TEST_CASE("bicrossproduct calculus with r^{-1} coefficients") {
    Fixture f = fixture_bicrossproduct(BicrossFamily::PropI);
    const Calculus& calc = *f.calculus;
    CHECK(calc.validate().all_passed());
    CHECK(calc.lambda2_rank() == 1);

    const Algebra& A = calc.algebra();
    // d t = rinv t dr + rinv v
    TensorForm dt = calc.differentiate(A.generator(2));
    TensorForm expect;
    expect.degree = 1;
    expect.add_term(Word(1, 0), A.mul(A.generator(1), A.generator(2)));
    expect.add_term(Word(1, 1), A.generator(1));
    CHECK(dt == expect);
}

TEST_CASE("cqsl2 calculus at q = i") {
    Fixture f = fixture_cqsl2(true);
    const Calculus& calc = *f.calculus;
    CHECK(calc.validate().all_passed());
    CHECK(calc.lambda2_rank() == 3);

    const Algebra& A = calc.algebra();
    Scalar q = f.scalars.at("q");
    // d a = q b e^+ + a e^0 with generator letters (b,a,d,c)
    TensorForm da = calc.differentiate(A.generator(1));
    TensorForm expect;
    expect.degree = 1;
    expect.add_term(Word(1, 0), A.generator(0).scaled(q));
    expect.add_term(Word(1, 1), A.generator(1));
    CHECK(da == expect);

    // d e^pm = 0 at q^2 = -1
    CHECK(calc.d_basis(0).is_zero());
    CHECK(calc.d_basis(2).is_zero());
    CHECK(!calc.d_basis(1).is_zero());
}

TEST_CASE("cqsl2 calculus with symbolic q") {
    Fixture f = fixture_cqsl2_ansatz();
    CHECK(f.calculus->validate().all_passed());
    // for generic q the basis forms are not closed
    CHECK(!f.calculus->d_basis(0).is_zero());
}

TEST_CASE("grassmann central calculus") {
    Fixture f = fixture_grassmann_central(3);
    CHECK(f.calculus->validate().all_passed());
    CHECK(f.calculus->lambda2_rank() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(f.calculus->d_basis(i).is_zero());
}

TEST_CASE("broken differential fails validation with witness") {
    Fixture good = fixture_m2();
    // replace d E11 by the central form s; then d(E11 E11) = d E11 fails,
    // since the Leibniz expansion gives 2 E11 s
    Calculus::Spec spec;
    auto A = good.calculus->algebra_ptr();
    spec.algebra = A;
    spec.basis_names = good.calculus->basis_names();
    spec.comm_auto = {good.calculus->comm_auto(0), good.calculus->comm_auto(1)};
    spec.d_gen = {TensorForm::basis_word(Word(1, 0), A->one()),
                  good.calculus->differentiate(A->generator(1)),
                  good.calculus->differentiate(A->generator(2)),
                  good.calculus->differentiate(A->generator(3))};
    spec.lambda2_relations = good.calculus->lambda2_relations();
    TensorForm z;
    z.degree = 2;
    spec.d_basis = {z, z};
    Calculus bad(std::move(spec));
    auto report = bad.validate();
    const CheckResult* r = report.find("leibniz_consistency");
    REQUIRE(r != nullptr);
    CHECK(!r->passed);
    CHECK(!r->witness.empty());
}
