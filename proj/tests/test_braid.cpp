#include "doctest.h"

#include "qjet/fixtures.hpp"

using namespace qjet;

namespace {
ScalarTensorMap flip2(size_t dim) {
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    for (const Word& w : words_of(dim, 2)) table[w] = {{Word{w[1], w[0]}, Scalar(1)}};
    return ScalarTensorMap::from_degree2_table(dim, table);
}
}  // namespace

TEST_CASE("braided integers expand as displayed") {
    Fixture f = fixture_s3(true);
    const BraidOperator& b = f.connection->braid();

    // [2|1] = id + sigma_1
    CHECK(b.binomial(2, 1) == ScalarTensorMap::identity(3, 2) + b.sigma_at(1, 2));
    // [3|1] = id + sigma_2 + sigma_1 sigma_2
    CHECK(b.binomial(3, 1) == ScalarTensorMap::identity(3, 3) + b.sigma_at(2, 3) +
                                  b.sigma_at(1, 3).compose(b.sigma_at(2, 3)));
    // [3|2] = id + sigma_1 + sigma_2 sigma_1
    CHECK(b.binomial(3, 2) == ScalarTensorMap::identity(3, 3) + b.sigma_at(1, 3) +
                                  b.sigma_at(2, 3).compose(b.sigma_at(1, 3)));
    // [2]! = id + sigma
    CHECK(b.factorial(2) == ScalarTensorMap::identity(3, 2) + b.sigma_at(1, 2));

    // direct expansions of [n,sigma] and [n,sigma]' for n <= 5
    for (int n = 3; n <= 5; ++n) {
        ScalarTensorMap integer = ScalarTensorMap::identity(3, n);
        ScalarTensorMap chain = ScalarTensorMap::identity(3, n);
        for (int i = n - 1; i >= 1; --i) {
            chain = b.sigma_at(i, n).compose(chain);
            integer = integer + chain;
        }
        CHECK(b.binomial(n, 1) == integer);

        ScalarTensorMap cointeger = ScalarTensorMap::identity(3, n);
        ScalarTensorMap chain2 = ScalarTensorMap::identity(3, n);
        for (int i = 1; i <= n - 1; ++i) {
            chain2 = b.sigma_at(i, n).compose(chain2);
            cointeger = cointeger + chain2;
        }
        CHECK(b.binomial(n, n - 1) == cointeger);
    }
}

TEST_CASE("flip binomials count shuffles") {
    BraidOperator b(2, flip2(2));
    const ScalarTensorMap& m = b.binomial(4, 2);
    Scalar total = Scalar::zero();
    for (auto& [u, s] : m.column(Word{0, 0, 1, 1})) total += s;
    CHECK(total == Scalar(6));

    const ScalarTensorMap& fact = b.factorial(3);
    Scalar total3 = Scalar::zero();
    for (auto& [u, s] : fact.column(Word{0, 0, 1})) total3 += s;
    CHECK(total3 == Scalar(6));
    CHECK(fact.column(Word{0, 1, 1}).size() == 3);
}

TEST_CASE("ybe pass and fail") {
    CHECK(fixture_m2().connection->braid().check_ybe().all_passed());
    CHECK(fixture_s3(true).connection->braid().check_ybe().all_passed());
    CHECK(fixture_s3(false).connection->braid().check_ybe().all_passed());

    // all four bicrossproduct families obey the braid relations identically
    CHECK(fixture_bicrossproduct(BicrossFamily::I).connection->braid().check_ybe().all_passed());
    CHECK(fixture_bicrossproduct(BicrossFamily::II).connection->braid().check_ybe().all_passed());
    CHECK(fixture_bicrossproduct(BicrossFamily::III).connection->braid().check_ybe().all_passed());
    CHECK(fixture_bicrossproduct(BicrossFamily::IV).connection->braid().check_ybe().all_passed());

    // a generic off-family point fails with a witness word
    BicrossParams p;
    p.values.emplace("lambda", Scalar(1));
    p.values.emplace("alpha", Scalar(1));
    p.values.emplace("beta", Scalar(2));
    p.values.emplace("gamma", Scalar(3, 2));
    p.values.emplace("delta", Scalar(1));
    p.values.emplace("alphaP", Scalar(2));
    p.values.emplace("betaP", Scalar(5));
    p.values.emplace("gammaP", Scalar(1, 3));
    p.values.emplace("deltaP", Scalar(4));
    Fixture off = fixture_bicrossproduct(BicrossFamily::Ansatz, p);
    auto report = off.connection->braid().check_ybe();
    CHECK(!report.all_passed());
    CHECK(!report.results[0].witness.empty());
}

TEST_CASE("binomial composition identity") {
    std::vector<Fixture> fixtures;
    fixtures.push_back(fixture_m2());
    fixtures.push_back(fixture_s3(true));
    fixtures.push_back(fixture_cqsl2(true, Scalar(2)));
    for (const Fixture& f : fixtures) {
        const BraidOperator& b = f.connection->braid();
        for (int n = 2; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                for (int m = 0; m <= k; ++m)
                    CHECK(b.binomial_identity_check(n, k, m).all_passed());
    }
    BraidOperator flip(2, flip2(2));
    CHECK(flip.binomial_identity_check(4, 2, 1).all_passed());
}

TEST_CASE("through-crossing identity") {
    // sigma_1..sigma_{n-m} ([n-m|k-m] (x) id^m) =
    //   (id (x) [n-m|k-m] (x) id^{m-1}) sigma_1..sigma_{n-m}
    Fixture f = fixture_s3(true);
    const BraidOperator& b = f.connection->braid();
    for (int n = 3; n <= 5; ++n) {
        for (int m = 1; m < n; ++m) {
            for (int k = m; k <= n; ++k) {
                ScalarTensorMap left_inner(3, n, n);
                for (const Word& w : words_of(3, n)) {
                    Word head = w.substr(0, n - m), tail = w.substr(n - m);
                    std::vector<std::pair<Word, Scalar>> images;
                    for (auto& [u, s] : b.binomial(n - m, k - m).column(head))
                        images.emplace_back(u + tail, s);
                    left_inner.set_column(w, std::move(images));
                }
                ScalarTensorMap lhs = b.cascade(n - m, n).compose(left_inner);

                ScalarTensorMap right_inner(3, n, n);
                for (const Word& w : words_of(3, n)) {
                    Word mid = w.substr(1, n - m), rest = w.substr(1 + (n - m));
                    std::vector<std::pair<Word, Scalar>> images;
                    for (auto& [u, s] : b.binomial(n - m, k - m).column(mid))
                        images.emplace_back(Word(1, w[0]) + u + rest, s);
                    right_inner.set_column(w, std::move(images));
                }
                ScalarTensorMap rhs = right_inner.compose(b.cascade(n - m, n));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sym rank and kernel for the fixtures") {
    Fixture s3 = fixture_s3(true);
    auto data = s3.connection->braid().sym_rank_and_kernel(2);
    CHECK(data.rank == 5);
    CHECK(data.kernel.size() == 4);
    {
        TensorForm t;
        t.degree = 2;
        const Algebra& A = s3.calculus->algebra();
        t.add_term(Word{2, 1}, A.one());
        t.add_term(Word{0, 2}, A.one().scaled(Scalar(-1)));
        TensorForm image = t + s3.connection->braid().sigma().apply(t);
        CHECK(image.is_zero());
    }

    Fixture cq = fixture_cqsl2(true, Scalar(0));
    CHECK(cq.connection->braid().sym_rank_and_kernel(2).rank == 4);

    Fixture bi = fixture_bicrossproduct(BicrossFamily::PropI);
    auto bdata = bi.connection->braid().sym_rank_and_kernel(2);
    REQUIRE(bdata.kernel.size() == 1);
    Scalar lam = bi.scalars.at("lambda");
    const ScalarVec& k = bdata.kernel[0];
    Scalar scale = k[2];
    REQUIRE(!scale.is_zero());
    CHECK(k[0] == scale * lam);
    CHECK(k[1] == -scale);
    CHECK(k[3].is_zero());
    CHECK(bdata.rank + bdata.kernel.size() == 4);
}

TEST_CASE("eigen structure") {
    Fixture s3 = fixture_s3(true);
    Cyclotomic q = s3.scalars.at("q").constant();
    auto ev = s3.connection->braid().eigen_structure(3);
    REQUIRE(ev.size() == 3);
    std::map<std::string, unsigned> seen;
    for (auto& e : ev) seen[e.value.str()] = e.multiplicity;
    CHECK(seen[(-Cyclotomic(1)).str()] == 4);
    CHECK(seen[(-(q * q)).str()] == 4);
    CHECK(seen[(-q).str()] == 1);

    for (BicrossFamily fam : {BicrossFamily::PropI, BicrossFamily::PropII}) {
        Fixture bi = fixture_bicrossproduct(fam);
        auto bev = bi.connection->braid().eigen_structure();
        REQUIRE(bev.size() == 2);
        std::map<std::string, unsigned> bs;
        for (auto& e : bev) bs[e.value.str()] = e.multiplicity;
        CHECK(bs[Cyclotomic(1).str()] == 3);
        CHECK(bs[Cyclotomic(-1).str()] == 1);
    }

    BraidOperator flip(2, flip2(2));
    auto fev = flip.eigen_structure();
    std::map<std::string, unsigned> fs;
    for (auto& e : fev) fs[e.value.str()] = e.multiplicity;
    CHECK(fs[Cyclotomic(1).str()] == 3);
    CHECK(fs[Cyclotomic(-1).str()] == 1);
}
