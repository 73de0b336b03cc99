#pragma once

#include "qjet/connection.hpp"

namespace qjet {

// A built-in geometry: validated algebra + calculus + connection plus a
// bag of named expected values used by the verification suites.
struct Fixture {
    std::string name;
    std::shared_ptr<const Calculus> calculus;
    std::shared_ptr<const Connection> connection;
    // free parameters left symbolic, with display names
    std::vector<std::string> parameters;
    // named scalar constants (coefficients from the worked examples)
    std::map<std::string, Scalar> scalars;
    // named algebra elements / tensor forms for the datasets
    std::map<std::string, AlgebraElement> elements;
    std::map<std::string, TensorForm> forms;
    // which conditions this fixture is expected to pass (empty: unasserted)
    std::set<Condition> expected_pass;

    const Algebra& algebra() const { return calculus->algebra(); }
    // validate presentation, calculus, braiding and connection consistency
    CheckReport load_checks() const;
};

// n central closed 1-forms over the commutative polynomial algebra,
// nabla = 0, sigma = flip.
Fixture fixture_grassmann_central(size_t n);

// M_2(C) with its 2D calculus, theta = E12 s + E21 t, sigma = -flip.
Fixture fixture_m2();

// Functions on S_3 with the 3D 2-cycles calculus; branch selects
// q = zeta_3 (plus) or q = zeta_3^2 (minus).
Fixture fixture_s3(bool plus_branch);

enum class BicrossFamily { I, II, III, IV, PropI, PropII, Ansatz };

struct BicrossParams {
    // ansatz coefficients; entries left unset stay symbolic parameters
    std::map<std::string, Scalar> values;
};

// Bicrossproduct Minkowski spacetime [r,t] = lambda r with the 2D
// central basis {dr, v}; connection ansatz specialized per family.
Fixture fixture_bicrossproduct(BicrossFamily family, const BicrossParams& params = {});

// C_q[SL_2] at q = +-i with the 3D calculus; nu stays symbolic unless a
// value is supplied.
Fixture fixture_cqsl2(bool q_plus_i, std::optional<Scalar> nu = std::nullopt);

// General left-invariant connection ansatz on the C_q[SL_2] calculus with
// symbolic q and parameters alpha_pm, beta_pm, gamma, nu, mu; used for
// the negative-control analysis. Returned fixture has no asserted set.
Fixture fixture_cqsl2_ansatz();

// names of all shipped fixtures in CLI order
std::vector<std::string> fixture_names();
// construct by CLI name with options (branch/family/sign/params)
Fixture make_fixture(const std::string& name, const std::map<std::string, std::string>& options);

}  // namespace qjet
