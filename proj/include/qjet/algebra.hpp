#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qjet/report_types.hpp"
#include "qjet/scalar.hpp"

namespace qjet {

// Word over generator (or basis) indices. For structure-constant algebras
// words always have length 1; the empty word is the unit of a presented
// algebra.
using Word = std::basic_string<unsigned char>;

std::string word_str(const Word& w, const std::vector<std::string>& names);

class Algebra;

// Normal-form linear combination of canonical monomials.
class AlgebraElement {
  public:
    AlgebraElement() = default;

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const Scalar& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  private:
    std::map<Word, Scalar> terms_;
};

// One rewrite rule: a monomial rewrites to a normal-form combination.
struct RewriteRule {
    Word lhs;
    AlgebraElement rhs;
};

struct StructureConstants {
    // product[i][j] = basis expansion of x_i x_j
    std::vector<std::vector<AlgebraElement>> product;
    AlgebraElement unit;  // expansion of 1 over the basis
};

// An algebra endomorphism given by generator/basis images. For rewrite
// presentations it is multiplicative by construction; for structure
// constants it is a linear map checked to be multiplicative on validation.
class Endomorphism {
  public:
    Endomorphism() = default;
    Endomorphism(std::shared_ptr<const Algebra> algebra, std::vector<AlgebraElement> images,
                 std::string name = "");

    const std::string& name() const { return name_; }
    const std::vector<AlgebraElement>& images() const { return images_; }
    AlgebraElement apply(const AlgebraElement& x) const;
    bool is_identity() const;
    // images of the defining relations normalize to zero
    CheckReport validate() const;

  private:
    std::shared_ptr<const Algebra> algebra_;
    std::vector<AlgebraElement> images_;
    std::string name_;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    enum class Kind { StructureConstants, Rewrite };

    static std::shared_ptr<Algebra> structure_constants(std::string name,
                                                        std::vector<std::string> basis_names,
                                                        StructureConstants table);
    // weights: per-generator positive weights for the monomial order
    // (weight, then length, then lex); empty means all 1.
    static std::shared_ptr<Algebra> rewrite(std::string name,
                                            std::vector<std::string> generator_names,
                                            std::vector<RewriteRule> rules,
                                            unsigned degree_bound = 24,
                                            std::vector<unsigned> weights = {});

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    size_t symbol_count() const { return symbols_.size(); }
    unsigned degree_bound() const { return degree_bound_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const StructureConstants& table() const { return table_; }
    const std::vector<unsigned>& weights() const { return weights_; }

    AlgebraElement zero() const { return AlgebraElement(); }
    AlgebraElement one() const;
    AlgebraElement generator(size_t i) const;
    AlgebraElement from_scalar(const Scalar& c) const { return one().scaled(c); }

    // Normal form of a formal word combination.
    AlgebraElement nf(const Word& w, const Scalar& coeff = Scalar::one()) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;

    // StructureConstants: associativity + unit on basis triples.
    // Rewrite: rules ordered correctly and all critical pairs join.
    CheckReport validate() const;

    std::string str(const AlgebraElement& x) const;

  private:
    Kind kind_;
    std::string name_;
    std::vector<std::string> symbols_;
    std::vector<RewriteRule> rules_;
    StructureConstants table_;
    unsigned degree_bound_ = 24;
    std::vector<unsigned> weights_;
    mutable std::map<Word, AlgebraElement> nf_cache_;

    AlgebraElement nf_word_(const Word& w) const;
};

}  // namespace qjet
