#include "qjet/fixtures.hpp"

#include <array>
#include <sstream>

namespace qjet {

namespace {

AlgebraElement mono(std::initializer_list<int> gens, const Scalar& c) {
    AlgebraElement e;
    Word w;
    for (int g : gens) w.push_back(static_cast<unsigned char>(g));
    e.add_term(w, c);
    return e;
}

TensorForm basis1(size_t i, const AlgebraElement& coeff) {
    return TensorForm::basis_word(Word(1, static_cast<unsigned char>(i)), coeff);
}

ScalarVec relation(size_t dim, std::initializer_list<std::pair<Word, Scalar>> entries) {
    ScalarVec v(dim * dim, Scalar::zero());
    for (auto& [w, s] : entries) v[static_cast<size_t>(w[0]) * dim + w[1]] += s;
    return v;
}

std::vector<Endomorphism> identity_autos(const std::shared_ptr<const Algebra>& A, size_t dim) {
    std::vector<AlgebraElement> images;
    for (size_t i = 0; i < A->symbol_count(); ++i) images.push_back(A->generator(i));
    std::vector<Endomorphism> out;
    for (size_t i = 0; i < dim; ++i) out.emplace_back(A, images, "id");
    return out;
}

ScalarTensorMap flip_map(size_t dim, const Scalar& sign) {
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    for (const Word& w : words_of(dim, 2)) table[w] = {{Word{w[1], w[0]}, sign}};
    return ScalarTensorMap::from_degree2_table(dim, table);
}

}  // namespace

CheckReport Fixture::load_checks() const {
    CheckReport report;
    report.merge(calculus->validate());
    report.merge(connection->validate());
    return report;
}

// ---------------------------------------------------------------------------
// central closed basis over a polynomial algebra

Fixture fixture_grassmann_central(size_t n) {
    if (n < 1) throw ParameterDomain("grassmann dimension");
    std::vector<std::string> gens;
    for (size_t i = 0; i < n; ++i) gens.push_back("x" + std::to_string(i + 1));
    std::vector<RewriteRule> rules;
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < j; ++i)
            rules.push_back({Word{static_cast<unsigned char>(j), static_cast<unsigned char>(i)},
                             mono({static_cast<int>(i), static_cast<int>(j)}, Scalar(1))});
    auto A = Algebra::rewrite("poly" + std::to_string(n), gens, std::move(rules));

    Calculus::Spec spec;
    spec.algebra = A;
    for (size_t i = 0; i < n; ++i) spec.basis_names.push_back("e" + std::to_string(i + 1));
    spec.comm_auto = identity_autos(A, n);
    for (size_t i = 0; i < n; ++i) spec.d_gen.push_back(basis1(i, A->one()));
    for (size_t i = 0; i < n; ++i)
        spec.lambda2_relations.push_back(relation(
            n, {{Word{static_cast<unsigned char>(i), static_cast<unsigned char>(i)}, Scalar(1)}}));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            spec.lambda2_relations.push_back(relation(
                n, {{Word{static_cast<unsigned char>(i), static_cast<unsigned char>(j)}, Scalar(1)},
                    {Word{static_cast<unsigned char>(j), static_cast<unsigned char>(i)}, Scalar(1)}}));
    for (size_t i = 0; i < n; ++i) {
        TensorForm zero;
        zero.degree = 2;
        spec.d_basis.push_back(zero);
    }
    auto calc = std::make_shared<Calculus>(std::move(spec));

    std::vector<TensorForm> gamma;
    for (size_t i = 0; i < n; ++i) {
        TensorForm zero;
        zero.degree = 2;
        gamma.push_back(zero);
    }
    Fixture f;
    f.name = "grassmann" + std::to_string(n);
    f.calculus = calc;
    f.connection = std::make_shared<Connection>(calc, std::move(gamma), flip_map(n, Scalar(1)));
    f.expected_pass = all_conditions();
    return f;
}

// ---------------------------------------------------------------------------
// M2(C)

namespace {
std::shared_ptr<Algebra> m2_algebra() {
    std::vector<std::string> names{"E11", "E12", "E21", "E22"};
    auto idx = [](int i, int j) { return 2 * i + j; };
    StructureConstants sc;
    sc.product.assign(4, std::vector<AlgebraElement>(4));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    AlgebraElement e;
                    if (j == k)
                        e.add_term(Word(1, static_cast<unsigned char>(idx(i, l))), Scalar(1));
                    sc.product[idx(i, j)][idx(k, l)] = e;
                }
    AlgebraElement unit;
    unit.add_term(Word(1, 0), Scalar(1));
    unit.add_term(Word(1, 3), Scalar(1));
    sc.unit = unit;
    return Algebra::structure_constants("M2", names, std::move(sc));
}
}  // namespace

Fixture fixture_m2() {
    auto A = m2_algebra();
    const int E11 = 0, E12 = 1, E21 = 2, E22 = 3;

    Calculus::Spec spec;
    spec.algebra = A;
    spec.basis_names = {"s", "t"};
    spec.comm_auto = identity_autos(A, 2);
    // d a = [E12, a] s + [E21, a] t
    auto commutator = [&](int x, int y) {
        return A->mul(A->generator(x), A->generator(y)) - A->mul(A->generator(y), A->generator(x));
    };
    for (int g = 0; g < 4; ++g) {
        TensorForm d;
        d.degree = 1;
        d.add_term(Word(1, 0), commutator(E12, g));
        d.add_term(Word(1, 1), commutator(E21, g));
        spec.d_gen.push_back(d);
    }
    spec.lambda2_relations = {
        relation(2, {{Word{0, 0}, Scalar(1)}}),
        relation(2, {{Word{1, 1}, Scalar(1)}}),
        relation(2, {{Word{0, 1}, Scalar(1)}, {Word{1, 0}, Scalar(-1)}}),
    };
    // theta = E12 s + E21 t
    TensorForm theta;
    theta.degree = 1;
    theta.add_term(Word(1, 0), A->generator(E12));
    theta.add_term(Word(1, 1), A->generator(E21));
    // d s = 2 theta ^ s, d t = 2 theta ^ t (as degree-2 tensors)
    {
        TensorForm ds;
        ds.degree = 2;
        ds.add_term(Word{0, 0}, A->generator(E12).scaled(Scalar(2)));
        ds.add_term(Word{1, 0}, A->generator(E21).scaled(Scalar(2)));
        spec.d_basis.push_back(ds);
        TensorForm dt;
        dt.degree = 2;
        dt.add_term(Word{0, 1}, A->generator(E12).scaled(Scalar(2)));
        dt.add_term(Word{1, 1}, A->generator(E21).scaled(Scalar(2)));
        spec.d_basis.push_back(dt);
    }
    spec.theta = theta;
    auto calc = std::make_shared<Calculus>(std::move(spec));

    Fixture f;
    f.name = "m2";
    f.calculus = calc;
    f.connection =
        std::make_shared<Connection>(Connection::inner(calc, flip_map(2, Scalar(-1))));
    f.forms.emplace("theta", theta);
    TensorForm g;
    g.degree = 2;
    g.add_term(Word{0, 1}, A->one());
    g.add_term(Word{1, 0}, A->one().scaled(Scalar(-1)));
    f.forms.emplace("g", g);
    f.expected_pass = all_conditions();
    return f;
}

// ---------------------------------------------------------------------------
// functions on S3

namespace {
// permutations of {0,1,2}; composition (g h)(x) = g(h(x))
using Perm = std::array<int, 3>;
Perm pcompose(const Perm& g, const Perm& h) { return {g[h[0]], g[h[1]], g[h[2]]}; }
}  // namespace

Fixture fixture_s3(bool plus_branch) {
    const Perm pe{0, 1, 2}, pu{1, 0, 2}, pv{0, 2, 1}, pw{2, 1, 0};
    const Perm puv = pcompose(pu, pv), pvu = pcompose(pv, pu);
    std::vector<Perm> elems{pe, pu, pv, pw, puv, pvu};
    std::vector<std::string> names{"d_e", "d_u", "d_v", "d_w", "d_uv", "d_vu"};
    auto find = [&](const Perm& p) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p) return i;
        throw Error("permutation lookup");
    };

    StructureConstants sc;
    sc.product.assign(6, std::vector<AlgebraElement>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            AlgebraElement e;
            if (i == j) e.add_term(Word(1, static_cast<unsigned char>(i)), Scalar(1));
            sc.product[i][j] = e;
        }
    AlgebraElement unit;
    for (size_t i = 0; i < 6; ++i) unit.add_term(Word(1, static_cast<unsigned char>(i)), Scalar(1));
    sc.unit = unit;
    auto A = Algebra::structure_constants("CS3", names, std::move(sc));

    // right translations R_a(delta_h) = delta_{h a} for involutions a
    std::array<Perm, 3> gens2{pu, pv, pw};
    std::vector<Endomorphism> autos;
    for (const Perm& a : gens2) {
        std::vector<AlgebraElement> images(6);
        for (size_t h = 0; h < 6; ++h) {
            size_t target = find(pcompose(elems[h], a));
            images[h] = A->generator(target);
        }
        autos.emplace_back(A, images, "R");
    }

    Calculus::Spec spec;
    spec.algebra = A;
    spec.basis_names = {"e_u", "e_v", "e_w"};
    spec.comm_auto = autos;
    // d f = sum_a (R_a(f) - f) e_a
    for (size_t h = 0; h < 6; ++h) {
        TensorForm d;
        d.degree = 1;
        for (size_t a = 0; a < 3; ++a)
            d.add_term(Word(1, static_cast<unsigned char>(a)),
                       autos[a].apply(A->generator(h)) - A->generator(h));
        spec.d_gen.push_back(d);
    }
    spec.lambda2_relations = {
        relation(3, {{Word{0, 0}, Scalar(1)}}),
        relation(3, {{Word{1, 1}, Scalar(1)}}),
        relation(3, {{Word{2, 2}, Scalar(1)}}),
        relation(3, {{Word{0, 1}, Scalar(1)}, {Word{1, 2}, Scalar(1)}, {Word{2, 0}, Scalar(1)}}),
        relation(3, {{Word{1, 0}, Scalar(1)}, {Word{2, 1}, Scalar(1)}, {Word{0, 2}, Scalar(1)}}),
    };
    // d e_u = -e_v e_w - e_w e_v and cyclic rotations
    auto dbasis = [&](int b, int c) {
        TensorForm t;
        t.degree = 2;
        t.add_term(Word{static_cast<unsigned char>(b), static_cast<unsigned char>(c)},
                   A->one().scaled(Scalar(-1)));
        t.add_term(Word{static_cast<unsigned char>(c), static_cast<unsigned char>(b)},
                   A->one().scaled(Scalar(-1)));
        return t;
    };
    spec.d_basis = {dbasis(1, 2), dbasis(2, 0), dbasis(0, 1)};
    TensorForm theta;
    theta.degree = 1;
    for (int a = 0; a < 3; ++a) theta.add_term(Word(1, static_cast<unsigned char>(a)), A->one());
    spec.theta = theta;
    auto calc = std::make_shared<Calculus>(std::move(spec));

    // braiding over Q(zeta3)
    Cyclotomic z3 = Cyclotomic::zeta(3);
    Cyclotomic qc = plus_branch ? z3 : z3 * z3;
    Scalar q(qc);
    Scalar f1 = Scalar::one() / (Scalar::one() - q);  // 1/(1-q)
    Scalar qinv = q.inverse();
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    // diagonal class: sigma(e_a (x) e_a) = f1 (e_a e_a + q^{-1} others)
    for (unsigned char a = 0; a < 3; ++a) {
        std::vector<std::pair<Word, Scalar>> images;
        for (unsigned char b = 0; b < 3; ++b)
            images.emplace_back(Word{b, b}, a == b ? f1 : f1 * qinv);
        table[Word{a, a}] = images;
    }
    // cycle classes {(u,v),(v,w),(w,u)} and {(v,u),(w,v),(u,w)}
    auto cycle_class = [&](std::array<std::pair<int, int>, 3> cls) {
        for (size_t k = 0; k < 3; ++k) {
            Word w{static_cast<unsigned char>(cls[k].first),
                   static_cast<unsigned char>(cls[k].second)};
            std::vector<std::pair<Word, Scalar>> images;
            for (size_t m = 0; m < 3; ++m) {
                Word u{static_cast<unsigned char>(cls[m].first),
                       static_cast<unsigned char>(cls[m].second)};
                images.emplace_back(u, m == k ? f1 * q : f1);
            }
            table[w] = images;
        }
    };
    cycle_class({std::make_pair(0, 1), std::make_pair(1, 2), std::make_pair(2, 0)});
    cycle_class({std::make_pair(1, 0), std::make_pair(2, 1), std::make_pair(0, 2)});
    ScalarTensorMap sigma = ScalarTensorMap::from_degree2_table(3, table);

    Fixture f;
    f.name = plus_branch ? "s3+" : "s3-";
    f.calculus = calc;
    f.connection = std::make_shared<Connection>(Connection::inner(calc, std::move(sigma)));
    f.scalars.emplace("q", q);
    f.forms.emplace("theta", theta);
    f.expected_pass = all_conditions();
    return f;
}

// ---------------------------------------------------------------------------
// bicrossproduct Minkowski spacetime

Fixture fixture_bicrossproduct(BicrossFamily family, const BicrossParams& params) {
    auto value = [&](const std::string& name) {
        auto it = params.values.find(name);
        return it != params.values.end() ? it->second : Scalar::parameter(name);
    };
    Scalar lam = value("lambda");
    if (lam.is_zero()) throw ParameterDomain("lambda must be nonzero");

    Scalar alpha = value("alpha"), beta = value("beta"), gamma = value("gamma"),
           delta = value("delta");
    Scalar alphaP = value("alphaP"), betaP = value("betaP"), gammaP = value("gammaP"),
           deltaP = value("deltaP");
    std::vector<std::string> parameters;
    switch (family) {
        case BicrossFamily::I:
            if (delta.is_zero()) throw ParameterDomain("family (i) needs delta != 0");
            alpha = Scalar::zero();
            gamma = Scalar::zero();
            gammaP = delta + beta * deltaP / delta;
            alphaP = beta * (delta + beta * deltaP / delta) / delta;
            betaP = beta * deltaP / delta;
            parameters = {"lambda", "beta", "delta", "deltaP"};
            break;
        case BicrossFamily::II:
            alpha = delta = alphaP = deltaP = Scalar::zero();
            beta = -gamma;
            gammaP = -betaP;
            parameters = {"lambda", "gamma", "betaP"};
            break;
        case BicrossFamily::III:
            if (deltaP.is_zero()) throw ParameterDomain("family (iii) needs deltaP != 0");
            alpha = beta = gamma = delta = Scalar::zero();
            alphaP = betaP * betaP / deltaP;
            gammaP = betaP;
            parameters = {"lambda", "betaP", "deltaP"};
            break;
        case BicrossFamily::IV:
            alpha = gamma = delta = betaP = gammaP = deltaP = Scalar::zero();
            parameters = {"lambda", "beta", "alphaP"};
            break;
        case BicrossFamily::PropI:
            alpha = beta = gamma = alphaP = betaP = Scalar::zero();
            delta = Scalar(2);
            gammaP = Scalar(2);
            parameters = {"lambda", "deltaP"};
            break;
        case BicrossFamily::PropII:
            alpha = beta = gamma = delta = alphaP = deltaP = Scalar::zero();
            betaP = Scalar(-1);
            gammaP = Scalar(1);
            parameters = {"lambda"};
            break;
        case BicrossFamily::Ansatz:
            parameters = {"lambda", "alpha", "beta",  "gamma",  "delta",
                          "alphaP", "betaP", "gammaP", "deltaP"};
            break;
    }

    // algebra: r, rinv, t with [r,t] = lambda r
    const int R = 0, RINV = 1, T = 2;
    std::vector<RewriteRule> rules;
    rules.push_back({Word{R, RINV}, mono({}, Scalar(1))});
    rules.push_back({Word{RINV, R}, mono({}, Scalar(1))});
    rules.push_back({Word{T, R}, mono({R, T}, Scalar(1)) + mono({R}, -lam)});
    rules.push_back({Word{T, RINV}, mono({RINV, T}, Scalar(1)) + mono({RINV}, lam)});
    auto A = Algebra::rewrite("bicross", {"r", "rinv", "t"}, std::move(rules));

    Calculus::Spec spec;
    spec.algebra = A;
    spec.basis_names = {"dr", "v"};
    spec.comm_auto = identity_autos(A, 2);
    // d r = dr ; d rinv = -rinv^2 dr ; d t = rinv t dr + rinv v
    spec.d_gen.push_back(basis1(0, A->one()));
    spec.d_gen.push_back(basis1(0, mono({RINV, RINV}, Scalar(-1))));
    {
        TensorForm dt;
        dt.degree = 1;
        dt.add_term(Word(1, 0), mono({RINV, T}, Scalar(1)));
        dt.add_term(Word(1, 1), mono({RINV}, Scalar(1)));
        spec.d_gen.push_back(dt);
    }
    spec.lambda2_relations = {
        relation(2, {{Word{0, 0}, Scalar(1)}}),
        relation(2, {{Word{0, 1}, Scalar(1)}, {Word{1, 0}, Scalar(1)}}),
        relation(2, {{Word{1, 1}, Scalar(1)}, {Word{1, 0}, -lam}}),
    };
    {
        TensorForm ddr;
        ddr.degree = 2;
        spec.d_basis.push_back(ddr);
        TensorForm dv;
        dv.degree = 2;
        dv.add_term(Word{0, 1}, mono({RINV}, Scalar(2)));
        spec.d_basis.push_back(dv);
    }
    // theta = -(1/lambda)(rinv v + rinv t dr)
    TensorForm theta;
    theta.degree = 1;
    theta.add_term(Word(1, 0), mono({RINV, T}, -lam.inverse()));
    theta.add_term(Word(1, 1), mono({RINV}, -lam.inverse()));
    spec.theta = theta;
    auto calc = std::make_shared<Calculus>(std::move(spec));

    // braiding ansatz on {dr, v}
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    table[Word{0, 0}] = {{Word{0, 0}, Scalar(1)}};
    table[Word{1, 0}] = {{Word{0, 1}, Scalar(1)}};
    table[Word{0, 1}] = {{Word{1, 1}, lam * alpha},
                         {Word{1, 0}, Scalar(1) + lam * beta},
                         {Word{0, 1}, lam * gamma},
                         {Word{0, 0}, lam * delta}};
    table[Word{1, 1}] = {{Word{1, 1}, Scalar(1) + lam * alphaP},
                         {Word{1, 0}, lam * betaP},
                         {Word{0, 1}, lam * gammaP},
                         {Word{0, 0}, lam * deltaP}};
    ScalarTensorMap sigma = ScalarTensorMap::from_degree2_table(2, table);

    Fixture f;
    std::ostringstream name;
    name << "bicross_";
    switch (family) {
        case BicrossFamily::I: name << "i"; break;
        case BicrossFamily::II: name << "ii"; break;
        case BicrossFamily::III: name << "iii"; break;
        case BicrossFamily::IV: name << "iv"; break;
        case BicrossFamily::PropI: name << "prop_i"; break;
        case BicrossFamily::PropII: name << "prop_ii"; break;
        case BicrossFamily::Ansatz: name << "ansatz"; break;
    }
    f.name = name.str();
    f.calculus = calc;
    f.connection = std::make_shared<Connection>(Connection::inner(calc, std::move(sigma)));
    f.parameters = parameters;
    f.forms.emplace("theta", theta);
    f.scalars.emplace("lambda", lam);
    f.scalars.emplace("deltaP", deltaP);
    switch (family) {
        case BicrossFamily::PropI:
        case BicrossFamily::PropII:
            f.expected_pass = all_conditions();
            break;
        case BicrossFamily::I:
        case BicrossFamily::II:
        case BicrossFamily::III:
        case BicrossFamily::IV:
            f.expected_pass = {Condition::Ybe};
            break;
        case BicrossFamily::Ansatz:
            break;
    }
    return f;
}

// ---------------------------------------------------------------------------
// C_q[SL_2]

namespace {

struct CqCalc {
    std::shared_ptr<const Algebra> algebra;
    std::shared_ptr<Calculus> calculus;
};

// generator letter order b < a < d < c keeps the determinant relation local
enum { CQ_B = 0, CQ_A = 1, CQ_D = 2, CQ_C = 3 };

CqCalc cqsl2_calculus(const Scalar& q) {
    Scalar qi = q.inverse();
    std::vector<RewriteRule> rules;
    rules.push_back({Word{CQ_A, CQ_B}, mono({CQ_B, CQ_A}, qi)});
    rules.push_back({Word{CQ_C, CQ_A}, mono({CQ_A, CQ_C}, q)});
    rules.push_back({Word{CQ_D, CQ_B}, mono({CQ_B, CQ_D}, q)});
    rules.push_back({Word{CQ_C, CQ_D}, mono({CQ_D, CQ_C}, qi)});
    rules.push_back({Word{CQ_C, CQ_B}, mono({CQ_B, CQ_C}, Scalar(1))});
    rules.push_back({Word{CQ_A, CQ_D}, mono({}, Scalar(1)) + mono({CQ_B, CQ_C}, qi)});
    rules.push_back({Word{CQ_D, CQ_A}, mono({}, Scalar(1)) + mono({CQ_B, CQ_C}, q)});
    auto A = Algebra::rewrite("CqSL2", {"b", "a", "d", "c"}, std::move(rules), 24, {1, 2, 2, 1});

    // degree automorphisms: e^pm f = q^{|f|} f e^pm, e^0 f = q^{2|f|} f e^0
    auto degree_auto = [&](const Scalar& unit_power, std::string name) {
        std::vector<AlgebraElement> images(4);
        images[CQ_B] = A->generator(CQ_B).scaled(unit_power.inverse());
        images[CQ_A] = A->generator(CQ_A).scaled(unit_power);
        images[CQ_D] = A->generator(CQ_D).scaled(unit_power.inverse());
        images[CQ_C] = A->generator(CQ_C).scaled(unit_power);
        return Endomorphism(A, images, std::move(name));
    };

    Calculus::Spec spec;
    spec.algebra = A;
    spec.basis_names = {"e+", "e0", "e-"};
    spec.comm_auto = {degree_auto(q, "phi+"), degree_auto(q * q, "phi0"), degree_auto(q, "phi-")};
    // da = q b e+ + a e0 ; db = a e- - q^{-2} b e0
    // dc = q d e+ + c e0 ; dd = c e- - q^{-2} d e0
    spec.d_gen.resize(4);
    {
        Scalar qm2 = qi * qi;
        TensorForm da;
        da.degree = 1;
        da.add_term(Word(1, 0), A->generator(CQ_B).scaled(q));
        da.add_term(Word(1, 1), A->generator(CQ_A));
        TensorForm db;
        db.degree = 1;
        db.add_term(Word(1, 2), A->generator(CQ_A));
        db.add_term(Word(1, 1), A->generator(CQ_B).scaled(-qm2));
        TensorForm dc;
        dc.degree = 1;
        dc.add_term(Word(1, 0), A->generator(CQ_D).scaled(q));
        dc.add_term(Word(1, 1), A->generator(CQ_C));
        TensorForm dd;
        dd.degree = 1;
        dd.add_term(Word(1, 2), A->generator(CQ_C));
        dd.add_term(Word(1, 1), A->generator(CQ_D).scaled(-qm2));
        spec.d_gen[CQ_A] = da;
        spec.d_gen[CQ_B] = db;
        spec.d_gen[CQ_C] = dc;
        spec.d_gen[CQ_D] = dd;
    }
    Scalar q2 = q * q, q4 = q2 * q2;
    spec.lambda2_relations = {
        relation(3, {{Word{0, 0}, Scalar(1)}}),
        relation(3, {{Word{1, 1}, Scalar(1)}}),
        relation(3, {{Word{2, 2}, Scalar(1)}}),
        relation(3, {{Word{0, 2}, q2}, {Word{2, 0}, Scalar(1)}}),
        relation(3, {{Word{1, 0}, Scalar(1)}, {Word{0, 1}, q4}}),
        relation(3, {{Word{1, 2}, Scalar(1)}, {Word{2, 1}, q4.inverse()}}),
    };
    // de^0 = q^3 e+ (x) e- ; de^pm = -+ q^{+-2}(1+q^{-2}) e^pm (x) e^0
    Scalar two_qm2 = Scalar(1) + qi * qi;
    {
        TensorForm dp;
        dp.degree = 2;
        dp.add_term(Word{0, 1}, A->one().scaled(-q2 * two_qm2));
        spec.d_basis.push_back(dp);
        TensorForm d0;
        d0.degree = 2;
        d0.add_term(Word{0, 2}, A->one().scaled(q2 * q));
        spec.d_basis.push_back(d0);
        TensorForm dm;
        dm.degree = 2;
        dm.add_term(Word{2, 1}, A->one().scaled(qi * qi * two_qm2));
        spec.d_basis.push_back(dm);
    }
    CqCalc out;
    out.algebra = A;
    out.calculus = std::make_shared<Calculus>(std::move(spec));
    return out;
}

}  // namespace

Fixture fixture_cqsl2(bool q_plus_i, std::optional<Scalar> nu_value) {
    Cyclotomic ic = Cyclotomic::imaginary_unit();
    Scalar q(q_plus_i ? ic : -ic);
    CqCalc cc = cqsl2_calculus(q);

    Scalar nu = nu_value ? *nu_value : Scalar::parameter("nu");
    Scalar mu = -nu - q;

    // sigma(e^r (x) e^s) = (-1)^{rs} flip; the sign is -1 exactly when
    // both letters lie in {e^+, e^-}
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    auto sign_of = [](unsigned char i) { return i == 0 ? 1 : (i == 1 ? 0 : -1); };
    for (const Word& w : words_of(3, 2)) {
        int rs = sign_of(w[0]) * sign_of(w[1]);
        table[w] = {{Word{w[1], w[0]}, Scalar(rs == 0 ? 1 : -1)}};
    }
    ScalarTensorMap sigma = ScalarTensorMap::from_degree2_table(3, table);

    std::vector<TensorForm> gamma(3);
    gamma[0].degree = 2;  // nabla e+ = 0
    gamma[2].degree = 2;  // nabla e- = 0
    gamma[1].degree = 2;  // nabla e0 = nu e^{+-} + mu e^{-+}
    gamma[1].add_term(Word{0, 2}, cc.algebra->one().scaled(nu));
    gamma[1].add_term(Word{2, 0}, cc.algebra->one().scaled(mu));

    Fixture f;
    f.name = q_plus_i ? "cqsl2+" : "cqsl2-";
    f.calculus = cc.calculus;
    f.connection = std::make_shared<Connection>(cc.calculus, std::move(gamma), std::move(sigma));
    if (!nu_value) f.parameters = {"nu"};
    f.scalars.emplace("q", q);
    f.scalars.emplace("nu", nu);
    f.scalars.emplace("mu", mu);
    f.expected_pass = all_conditions();
    return f;
}

Fixture fixture_cqsl2_ansatz() {
    Scalar q = Scalar::parameter("q");
    CqCalc cc = cqsl2_calculus(q);
    Scalar alpha_p = Scalar::parameter("alpha_p"), alpha_m = Scalar::parameter("alpha_m");
    Scalar beta_p = Scalar::parameter("beta_p"), beta_m = Scalar::parameter("beta_m");
    Scalar gamma_c = Scalar::parameter("gamma"), nu = Scalar::parameter("nu");
    Scalar mu = Scalar::parameter("mu");

    Scalar q2 = q * q, q4 = q2 * q2;
    Scalar one = Scalar::one();
    // braiding determined by the connection through the right Leibniz rule
    std::map<Word, std::vector<std::pair<Word, Scalar>>> table;
    table[Word{0, 0}] = {{Word{0, 0}, q2}};
    table[Word{2, 2}] = {{Word{2, 2}, q2.inverse()}};
    table[Word{1, 1}] = {{Word{1, 1}, one + (one - q2) * gamma_c}};
    table[Word{0, 2}] = {{Word{2, 0}, q2.inverse()}};
    table[Word{2, 0}] = {{Word{0, 2}, q2}};
    table[Word{0, 1}] = {{Word{1, 0}, one + (one - q2) * alpha_p}, {Word{0, 1}, (one - q2) * beta_p}};
    table[Word{1, 0}] = {{Word{0, 1}, q4}};
    table[Word{2, 1}] = {{Word{1, 2}, one + (one - q2) * alpha_m}, {Word{2, 1}, (one - q2) * beta_m}};
    table[Word{1, 2}] = {{Word{2, 1}, q4.inverse()}};
    ScalarTensorMap sigma = ScalarTensorMap::from_degree2_table(3, table);

    std::vector<TensorForm> gamma(3);
    gamma[0].degree = 2;
    gamma[0].add_term(Word{1, 0}, cc.algebra->one().scaled(alpha_p));
    gamma[0].add_term(Word{0, 1}, cc.algebra->one().scaled(beta_p));
    gamma[1].degree = 2;
    gamma[1].add_term(Word{1, 1}, cc.algebra->one().scaled(gamma_c));
    gamma[1].add_term(Word{0, 2}, cc.algebra->one().scaled(nu));
    gamma[1].add_term(Word{2, 0}, cc.algebra->one().scaled(mu));
    gamma[2].degree = 2;
    gamma[2].add_term(Word{1, 2}, cc.algebra->one().scaled(alpha_m));
    gamma[2].add_term(Word{2, 1}, cc.algebra->one().scaled(beta_m));

    Fixture f;
    f.name = "cqsl2_ansatz";
    f.calculus = cc.calculus;
    f.connection = std::make_shared<Connection>(cc.calculus, std::move(gamma), std::move(sigma));
    f.parameters = {"q", "alpha_p", "alpha_m", "beta_p", "beta_m", "gamma", "nu", "mu"};
    f.scalars.emplace("q", q);
    return f;
}

// ---------------------------------------------------------------------------

std::vector<std::string> fixture_names() {
    return {"grassmann", "m2", "s3", "bicrossproduct", "cqsl2", "cqsl2_ansatz"};
}

Fixture make_fixture(const std::string& name, const std::map<std::string, std::string>& options) {
    auto opt = [&](const std::string& key, const std::string& fallback) {
        auto it = options.find(key);
        return it != options.end() ? it->second : fallback;
    };
    if (name == "grassmann") {
        return fixture_grassmann_central(static_cast<size_t>(std::stoul(opt("n", "2"))));
    }
    if (name == "m2") return fixture_m2();
    if (name == "s3") {
        std::string branch = opt("branch", "plus");
        if (branch != "plus" && branch != "minus") throw ParameterDomain("branch: plus|minus");
        return fixture_s3(branch == "plus");
    }
    if (name == "bicrossproduct") {
        std::string fam = opt("family", "prop_i");
        BicrossFamily family;
        if (fam == "i") family = BicrossFamily::I;
        else if (fam == "ii") family = BicrossFamily::II;
        else if (fam == "iii") family = BicrossFamily::III;
        else if (fam == "iv") family = BicrossFamily::IV;
        else if (fam == "prop_i") family = BicrossFamily::PropI;
        else if (fam == "prop_ii") family = BicrossFamily::PropII;
        else if (fam == "ansatz") family = BicrossFamily::Ansatz;
        else throw ParameterDomain("family: i|ii|iii|iv|prop_i|prop_ii|ansatz");
        BicrossParams params;
        for (auto& [k, v] : options) {
            if (k == "family" || k == "n" || k == "branch" || k == "sign") continue;
            params.values.emplace(k, Scalar(Cyclotomic(std::stol(v))));
        }
        return fixture_bicrossproduct(family, params);
    }
    if (name == "cqsl2") {
        std::string sign = opt("sign", "+i");
        if (sign != "+i" && sign != "-i") throw ParameterDomain("sign: +i|-i");
        std::optional<Scalar> nu;
        auto it = options.find("nu");
        if (it != options.end()) nu = Scalar(Cyclotomic(std::stol(it->second)));
        return fixture_cqsl2(sign == "+i", nu);
    }
    if (name == "cqsl2_ansatz") return fixture_cqsl2_ansatz();
    throw InvalidFixture("unknown fixture: " + name);
}

}  // namespace qjet
