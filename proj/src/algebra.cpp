#include "qjet/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qjet {

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << "*";
        out << names.at(w[i]);
    }
    return out.str();
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (auto& [w, x] : terms_) {
        Scalar s = x * c;
        if (!s.is_zero()) r.terms_.emplace(w, s);
    }
    return r;
}

std::shared_ptr<Algebra> Algebra::structure_constants(std::string name,
                                                      std::vector<std::string> basis_names,
                                                      StructureConstants table) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = Kind::StructureConstants;
    a->name_ = std::move(name);
    a->symbols_ = std::move(basis_names);
    a->table_ = std::move(table);
    if (a->table_.product.size() != a->symbols_.size())
        throw InvalidPresentation("structure constant table size");
    return a;
}

std::shared_ptr<Algebra> Algebra::rewrite(std::string name, std::vector<std::string> generator_names,
                                          std::vector<RewriteRule> rules, unsigned degree_bound,
                                          std::vector<unsigned> weights) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->kind_ = Kind::Rewrite;
    a->name_ = std::move(name);
    a->symbols_ = std::move(generator_names);
    a->rules_ = std::move(rules);
    a->degree_bound_ = degree_bound;
    if (weights.empty()) weights.assign(a->symbols_.size(), 1u);
    if (weights.size() != a->symbols_.size()) throw InvalidPresentation("weight count");
    a->weights_ = std::move(weights);
    return a;
}

AlgebraElement Algebra::one() const {
    AlgebraElement r;
    if (kind_ == Kind::Rewrite) {
        r.add_term(Word(), Scalar::one());
    } else {
        r = table_.unit;
    }
    return r;
}

AlgebraElement Algebra::generator(size_t i) const {
    if (i >= symbols_.size()) throw IndexOutOfRange("generator index");
    AlgebraElement r;
    Word w(1, static_cast<unsigned char>(i));
    r.add_term(w, Scalar::one());
    return r;
}

namespace {
// monomial order: total weight, then length, then lexicographic
bool word_less(const Word& a, const Word& b, const std::vector<unsigned>& weights) {
    unsigned long wa = 0, wb = 0;
    for (unsigned char g : a) wa += weights[g];
    for (unsigned char g : b) wb += weights[g];
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}
}  // namespace

AlgebraElement Algebra::nf_word_(const Word& w) const {
    if (kind_ == Kind::StructureConstants) {
        if (w.empty()) return table_.unit;
        AlgebraElement acc;
        acc.add_term(Word(1, w[0]), Scalar::one());
        for (size_t k = 1; k < w.size(); ++k) {
            AlgebraElement next;
            for (auto& [mono, c] : acc.terms())
                next = next + table_.product.at(mono[0]).at(w[k]).scaled(c);
            acc = std::move(next);
        }
        return acc;
    }
    if (w.size() > degree_bound_)
        throw DegreeBoundExceeded(name_ + ": word length " + std::to_string(w.size()));
    auto cached = nf_cache_.find(w);
    if (cached != nf_cache_.end()) return cached->second;
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (const auto& rule : rules_) {
            if (rule.lhs.empty() || pos + rule.lhs.size() > w.size()) continue;
            if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
            Word prefix = w.substr(0, pos);
            Word suffix = w.substr(pos + rule.lhs.size());
            AlgebraElement out;
            for (auto& [mono, c] : rule.rhs.terms()) {
                Word glued = prefix + mono + suffix;
                out = out + nf_word_(glued).scaled(c);
            }
            nf_cache_.emplace(w, out);
            return out;
        }
    }
    AlgebraElement out;
    out.add_term(w, Scalar::one());
    nf_cache_.emplace(w, out);
    return out;
}

AlgebraElement Algebra::nf(const Word& w, const Scalar& coeff) const {
    return nf_word_(w).scaled(coeff);
}

AlgebraElement Algebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            if (kind_ == Kind::Rewrite) {
                r = r + nf(wa + wb, ca * cb);
            } else {
                r = r + table_.product.at(wa[0]).at(wb[0]).scaled(ca * cb);
            }
        }
    return r;
}

CheckReport Algebra::validate() const {
    CheckReport report;
    if (kind_ == Kind::StructureConstants) {
        size_t n = symbols_.size();
        bool assoc = true;
        std::string witness;
        for (size_t i = 0; i < n && assoc; ++i)
            for (size_t j = 0; j < n && assoc; ++j)
                for (size_t k = 0; k < n && assoc; ++k) {
                    AlgebraElement left = mul(table_.product[i][j], generator(k));
                    AlgebraElement right = mul(generator(i), table_.product[j][k]);
                    if (!(left == right)) {
                        assoc = false;
                        witness = symbols_[i] + "," + symbols_[j] + "," + symbols_[k];
                    }
                }
        report.add("associativity", assoc, witness);
        bool unital = true;
        std::string uw;
        for (size_t i = 0; i < n; ++i) {
            if (!(mul(table_.unit, generator(i)) == generator(i)) ||
                !(mul(generator(i), table_.unit) == generator(i))) {
                unital = false;
                uw = symbols_[i];
                break;
            }
        }
        report.add("unit", unital, uw);
        return report;
    }

    // Rewrite backend: every rule must strictly decrease in deglex order
    bool ordered = true;
    std::string ow;
    for (const auto& rule : rules_) {
        for (auto& [mono, c] : rule.rhs.terms()) {
            if (!word_less(mono, rule.lhs, weights_)) {
                ordered = false;
                ow = word_str(rule.lhs, symbols_) + " -> " + word_str(mono, symbols_);
            }
        }
    }
    report.add("rules_ordered", ordered, ow);

    // Critical pairs: all one-step reduction choices of an overlap word
    // must reach the same normal form.
    bool confluent = true;
    std::string cw;
    auto check_word = [&](const Word& w) {
        if (!confluent) return;
        std::optional<AlgebraElement> first;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (const auto& rule : rules_) {
                if (rule.lhs.empty() || pos + rule.lhs.size() > w.size()) continue;
                if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
                Word prefix = w.substr(0, pos);
                Word suffix = w.substr(pos + rule.lhs.size());
                AlgebraElement out;
                for (auto& [mono, c] : rule.rhs.terms()) out = out + nf(prefix + mono + suffix, c);
                if (!first) {
                    first = out;
                } else if (!(*first == out)) {
                    confluent = false;
                    cw = word_str(w, symbols_);
                    return;
                }
            }
        }
    };
    for (const auto& r1 : rules_) {
        for (const auto& r2 : rules_) {
            for (size_t k = 1; k < r1.lhs.size() && k <= r2.lhs.size(); ++k) {
                if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) == 0) {
                    Word overlap = r1.lhs + r2.lhs.substr(k);
                    if (overlap.size() <= degree_bound_) check_word(overlap);
                }
            }
            if (r2.lhs.size() < r1.lhs.size()) {
                for (size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos) {
                    if (r1.lhs.compare(pos, r2.lhs.size(), r2.lhs) == 0) check_word(r1.lhs);
                }
            }
        }
    }
    report.add("critical_pairs", confluent, cw);
    return report;
}

std::string Algebra::str(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [w, c] : x.terms()) {
        std::string cs = c.str();
        if (!first) out << " + ";
        first = false;
        if (w.empty()) {
            out << cs;
        } else if (cs == "1") {
            out << word_str(w, symbols_);
        } else {
            bool parens = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
            if (parens) out << "(" << cs << ")";
            else out << cs;
            out << "*" << word_str(w, symbols_);
        }
    }
    return out.str();
}

Endomorphism::Endomorphism(std::shared_ptr<const Algebra> algebra,
                           std::vector<AlgebraElement> images, std::string name)
    : algebra_(std::move(algebra)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != algebra_->symbol_count())
        throw InvalidPresentation("endomorphism image count");
}

AlgebraElement Endomorphism::apply(const AlgebraElement& x) const {
    AlgebraElement out;
    if (algebra_->kind() == Algebra::Kind::StructureConstants) {
        for (auto& [w, c] : x.terms()) out = out + images_.at(w[0]).scaled(c);
        return out;
    }
    for (auto& [w, c] : x.terms()) {
        AlgebraElement prod = algebra_->one();
        for (unsigned char g : w) prod = algebra_->mul(prod, images_.at(g));
        out = out + prod.scaled(c);
    }
    return out;
}

bool Endomorphism::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (!(images_[i] == algebra_->generator(i))) return false;
    return true;
}

CheckReport Endomorphism::validate() const {
    CheckReport report;
    bool ok = true;
    std::string witness;
    if (algebra_->kind() == Algebra::Kind::Rewrite) {
        for (const auto& rule : algebra_->rules()) {
            AlgebraElement lhs;
            lhs.add_term(rule.lhs, Scalar::one());
            if (!(apply(lhs) == apply(rule.rhs))) {
                ok = false;
                witness = word_str(rule.lhs, algebra_->symbols());
                break;
            }
        }
    } else {
        size_t n = algebra_->symbol_count();
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                AlgebraElement lhs = apply(algebra_->table().product[i][j]);
                AlgebraElement rhs =
                    algebra_->mul(apply(algebra_->generator(i)), apply(algebra_->generator(j)));
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = algebra_->symbols()[i] + "," + algebra_->symbols()[j];
                }
            }
        if (ok && !(apply(algebra_->one()) == algebra_->one())) {
            ok = false;
            witness = "unit";
        }
    }
    report.add("endomorphism" + (name_.empty() ? "" : "(" + name_ + ")"), ok, witness);
    return report;
}

}  // namespace qjet
