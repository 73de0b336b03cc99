#include "doctest.h"

#include <random>

#include "qjet/algebra.hpp"

using namespace qjet;

namespace {

// 2x2 matrix units E11, E12, E21, E22
std::shared_ptr<Algebra> make_m2() {
    std::vector<std::string> names{"E11", "E12", "E21", "E22"};
    auto row = [](int i, int j) { return 2 * i + j; };
    StructureConstants sc;
    sc.product.assign(4, std::vector<AlgebraElement>(4));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    AlgebraElement e;
                    if (j == k) e.add_term(Word(1, static_cast<unsigned char>(row(i, l))), Scalar(1));
                    sc.product[row(i, j)][row(k, l)] = e;
                }
    AlgebraElement unit;
    unit.add_term(Word(1, 0), Scalar(1));
    unit.add_term(Word(1, 3), Scalar(1));
    sc.unit = unit;
    return Algebra::structure_constants("M2", names, std::move(sc));
}

// C_q[SL2] with symbolic q. Letter order b < a < d < c keeps the
// determinant relation local, so canonical monomials are b^j a^i c^k and
// b^j d^l c^k.
enum { G_b = 0, G_a = 1, G_d = 2, G_c = 3 };

std::shared_ptr<Algebra> make_cqsl2(const Scalar& q) {
    std::vector<std::string> names{"b", "a", "d", "c"};
    Scalar qi = q.inverse();
    auto mono = [](std::initializer_list<int> gens, const Scalar& c) {
        AlgebraElement e;
        Word w;
        for (int g : gens) w.push_back(static_cast<unsigned char>(g));
        e.add_term(w, c);
        return e;
    };
    std::vector<RewriteRule> rules;
    rules.push_back({Word{G_a, G_b}, mono({G_b, G_a}, qi)});                     // ab = q^{-1} ba
    rules.push_back({Word{G_c, G_a}, mono({G_a, G_c}, q)});                      // ca = q ac
    rules.push_back({Word{G_d, G_b}, mono({G_b, G_d}, q)});                      // db = q bd
    rules.push_back({Word{G_c, G_d}, mono({G_d, G_c}, qi)});                     // cd = q^{-1} dc
    rules.push_back({Word{G_c, G_b}, mono({G_b, G_c}, Scalar(1))});              // cb = bc
    rules.push_back({Word{G_a, G_d}, mono({}, Scalar(1)) + mono({G_b, G_c}, qi)});  // ad = 1 + q^{-1} bc
    rules.push_back({Word{G_d, G_a}, mono({}, Scalar(1)) + mono({G_b, G_c}, q)});   // da = 1 + q bc
    return Algebra::rewrite("CqSL2", names, std::move(rules), 24, {1, 2, 2, 1});
}

}  // namespace

TEST_CASE("matrix units") {
    auto m2 = make_m2();
    CHECK(m2->validate().all_passed());
    // E12 E21 = E11
    CHECK(m2->mul(m2->generator(1), m2->generator(2)) == m2->generator(0));
    // 1 x = x
    CHECK(m2->mul(m2->one(), m2->generator(2)) == m2->generator(2));

    // deliberately broken table fails with a witness triple
    StructureConstants bad;
    bad.product.assign(2, std::vector<AlgebraElement>(2));
    AlgebraElement e0, e1;
    e0.add_term(Word(1, 0), Scalar(1));
    e1.add_term(Word(1, 1), Scalar(1));
    bad.product[0][0] = e1;  // x0 x0 = x1
    bad.product[0][1] = e0;  // x0 x1 = x0
    bad.product[1][0] = e1;
    bad.product[1][1] = e1;
    bad.unit = e0 + e1;
    auto broken = Algebra::structure_constants("bad", {"x0", "x1"}, std::move(bad));
    auto report = broken->validate();
    CHECK(!report.all_passed());
    CHECK(!report.results[0].witness.empty());
}

TEST_CASE("cqsl2 rewrite normal forms") {
    Scalar q = Scalar::parameter("q");
    auto A = make_cqsl2(q);
    CHECK(A->validate().all_passed());

    // d a -> 1 + q bc
    AlgebraElement da = A->mul(A->generator(G_d), A->generator(G_a));
    AlgebraElement expect = A->one();
    expect.add_term(Word{G_b, G_c}, q);
    CHECK(da == expect);

    // ba = q ab, i.e. nf(ab) = q^{-1} ba
    AlgebraElement ba = A->mul(A->generator(G_b), A->generator(G_a));
    AlgebraElement ab = A->mul(A->generator(G_a), A->generator(G_b));
    CHECK(ba == ab.scaled(q));

    // nf is idempotent: renormalizing every monomial of a normal form is stable
    AlgebraElement x = A->mul(A->mul(A->generator(G_d), A->generator(G_a)), A->generator(G_b));
    AlgebraElement renf;
    for (auto& [w, c] : x.terms()) renf = renf + A->nf(w, c);
    CHECK(renf == x);

    // associativity on random bounded-degree elements
    std::mt19937_64 rng(7);
    auto random_element = [&]() {
        AlgebraElement e;
        for (int t = 0; t < 2; ++t) {
            Word w;
            size_t len = rng() % 3;
            for (size_t i = 0; i < len; ++i) w.push_back(static_cast<unsigned char>(rng() % 4));
            e = e + A->nf(w, Scalar(static_cast<long>(rng() % 5) - 2));
        }
        return e;
    };
    for (int trial = 0; trial < 8; ++trial) {
        AlgebraElement a = random_element(), b = random_element(), c = random_element();
        CHECK(A->mul(A->mul(a, b), c) == A->mul(a, A->mul(b, c)));
    }
}

TEST_CASE("cqsl2 degree automorphism") {
    Scalar q = Scalar::parameter("q");
    auto A = make_cqsl2(q);
    // f -> q^{|f|} f  with |a|=|c|=1, |b|=|d|=-1
    std::vector<AlgebraElement> images{
        A->generator(G_b).scaled(q.inverse()), A->generator(G_a).scaled(q),
        A->generator(G_d).scaled(q.inverse()), A->generator(G_c).scaled(q)};
    Endomorphism phi(A, images, "phi+");
    CHECK(phi.validate().all_passed());
    CHECK(phi.apply(A->generator(G_a)) == A->generator(G_a).scaled(q));
    // multiplicative on random pairs
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        Word w1, w2;
        for (size_t i = 0; i < rng() % 3; ++i) w1.push_back(static_cast<unsigned char>(rng() % 4));
        for (size_t i = 0; i < rng() % 3; ++i) w2.push_back(static_cast<unsigned char>(rng() % 4));
        AlgebraElement a = A->nf(w1), b = A->nf(w2);
        CHECK(phi.apply(A->mul(a, b)) == A->mul(phi.apply(a), phi.apply(b)));
    }
}

TEST_CASE("bicrossproduct algebra with inverse generator") {
    Scalar lam = Scalar::parameter("lambda");
    // generators r, rinv, t
    std::vector<RewriteRule> rules;
    auto mono = [](std::initializer_list<int> gens, const Scalar& c) {
        AlgebraElement e;
        Word w;
        for (int g : gens) w.push_back(static_cast<unsigned char>(g));
        e.add_term(w, c);
        return e;
    };
    rules.push_back({Word{0, 1}, mono({}, Scalar(1))});                         // r rinv = 1
    rules.push_back({Word{1, 0}, mono({}, Scalar(1))});                         // rinv r = 1
    rules.push_back({Word{2, 0}, mono({0, 2}, Scalar(1)) + mono({0}, -lam)});   // t r = r t - lam r
    rules.push_back({Word{2, 1}, mono({1, 2}, Scalar(1)) + mono({1}, lam)});    // t rinv = rinv t + lam rinv
    auto A = Algebra::rewrite("bicross", {"r", "rinv", "t"}, std::move(rules));
    CHECK(A->validate().all_passed());

    // t r = r t - lam r
    AlgebraElement tr = A->mul(A->generator(2), A->generator(0));
    AlgebraElement expect = mono({0, 2}, Scalar(1)) + mono({0}, -lam);
    CHECK(tr == expect);

    // r^{-1} really inverts
    CHECK(A->mul(A->generator(0), A->generator(1)) == A->one());

    // endomorphism validation catches non-maps
    Endomorphism badmap(A, {A->generator(0), A->generator(1), A->generator(2).scaled(Scalar(2))},
                        "bad");
    CHECK(!badmap.validate().all_passed());
}

TEST_CASE("functions on S3 as structure constants") {
    // basis delta_g for g in {e,u,v,w,uv,vu}; pointwise product
    size_t n = 6;
    StructureConstants sc;
    sc.product.assign(n, std::vector<AlgebraElement>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            AlgebraElement e;
            if (i == j) e.add_term(Word(1, static_cast<unsigned char>(i)), Scalar(1));
            sc.product[i][j] = e;
        }
    AlgebraElement unit;
    for (size_t i = 0; i < n; ++i) unit.add_term(Word(1, static_cast<unsigned char>(i)), Scalar(1));
    sc.unit = unit;
    auto A = Algebra::structure_constants("CS3", {"d_e", "d_u", "d_v", "d_w", "d_uv", "d_vu"},
                                          std::move(sc));
    CHECK(A->validate().all_passed());
    // idempotent deltas
    CHECK(A->mul(A->generator(1), A->generator(1)) == A->generator(1));
    CHECK(A->mul(A->generator(1), A->generator(2)).is_zero());
}
