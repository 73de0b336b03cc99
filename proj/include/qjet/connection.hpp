#pragma once

#include <set>

#include "qjet/braid.hpp"

namespace qjet {

enum class Condition {
    TorsionFree,
    Flat,
    Ybe,
    WedgeCompat,
    Extendable,
    LeibnizCompat,
    CurvBimod,
};

const std::set<Condition>& all_conditions();
std::string condition_name(Condition c);

// Bimodule connection on Omega^1 given by Gamma(e^i) = nabla e^i and the
// generalised braiding sigma, together with the induced tensor
// connections nabla_n, torsion, curvature and the condition battery.
class Connection {
  public:
    Connection(std::shared_ptr<const Calculus> calc, std::vector<TensorForm> gamma,
               ScalarTensorMap sigma2, bool inner_flag = false);

    // nabla = theta (x) ( ) - sigma(( ) (x) theta); throws NotInner
    // when the calculus has no theta.
    static Connection inner(std::shared_ptr<const Calculus> calc, ScalarTensorMap sigma2);

    const Calculus& calculus() const { return *calc_; }
    std::shared_ptr<const Calculus> calculus_ptr() const { return calc_; }
    const BraidOperator& braid() const { return braid_; }
    const TensorForm& gamma(size_t i) const { return gamma_.at(i); }
    bool inner_flag() const { return inner_; }

    // generator-level bimodule-connection consistency:
    // nabla(e^i a) = (nabla e^i) a + sigma(e^i (x) da)
    CheckReport validate() const;

    TensorForm nabla(const TensorForm& omega) const;
    // nabla_{|w|} e^w, memoized; degree |w|+1
    const TensorForm& nabla_word(const Word& w) const;
    TensorForm nabla_n(const TensorForm& t) const;
    // split form nabla_l (x) id + sigma_1..sigma_l (id^l (x) nabla_{n-l})
    TensorForm nabla_n_split(int l, const TensorForm& t) const;

    // T(e^i) = wedge Gamma(e^i) - d e^i
    Lambda2Tensor torsion(size_t i) const;

    // R_{nabla_n} on a basis word, direct formula
    Lambda2Tensor curvature_direct(const Word& w) const;
    // and by the tensor-product recursion
    Lambda2Tensor curvature_recursive(const Word& w) const;

    // sigma_{Omega^1,Omega^2}(e^i (x) Lambda-basis) as scalar data:
    // list of ((lambda index, basis index), scalar)
    std::vector<std::pair<std::pair<size_t, unsigned char>, Scalar>> sigma_1_2(
        unsigned char i, size_t lambda_index) const;

    CheckReport check_conditions(const std::set<Condition>& kinds) const;
    CheckReport check_all() const { return check_conditions(all_conditions()); }

  private:
    std::shared_ptr<const Calculus> calc_;
    std::vector<TensorForm> gamma_;
    BraidOperator braid_;
    bool inner_;
    mutable std::map<Word, TensorForm> nabla_word_cache_;

    // wedge_1 (id (x) nabla_{m-1}) on a left-normal tensor of degree m
    Lambda2Tensor wedge1_id_nabla_(const TensorForm& t) const;
};

}  // namespace qjet
