#include "qjet/calculus.hpp"

#include <sstream>

namespace qjet {

void Lambda2Tensor::add_term(size_t lambda_index, const Word& tail, const AlgebraElement& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(lambda_index, tail);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Lambda2Tensor Lambda2Tensor::operator+(const Lambda2Tensor& o) const {
    Lambda2Tensor r = *this;
    if (r.is_zero()) r.tail_degree = o.tail_degree;
    for (auto& [k, c] : o.terms) r.add_term(k.first, k.second, c);
    return r;
}

Lambda2Tensor Lambda2Tensor::operator-(const Lambda2Tensor& o) const {
    Lambda2Tensor neg;
    neg.tail_degree = o.tail_degree;
    for (auto& [k, c] : o.terms) neg.terms.emplace(k, -c);
    return *this + neg;
}

std::string Lambda2Tensor::first_term_str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    auto& [k, c] = *terms.begin();
    out << "lambda2[" << k.first << "] tail '";
    for (unsigned char x : k.second) out << static_cast<int>(x) << " ";
    out << "'";
    return out.str();
}

Calculus::Calculus(Spec spec) : spec_(std::move(spec)) {
    size_t n = spec_.basis_names.size();
    if (spec_.comm_auto.size() != n) throw InvalidFixture("comm_auto count");
    if (spec_.d_basis.size() != n) throw InvalidFixture("d_basis count");
    build_lambda2_();
    d_basis_reduced_.reserve(n);
    for (size_t i = 0; i < n; ++i) d_basis_reduced_.push_back(wedge_reduce(spec_.d_basis[i]));
}

void Calculus::build_lambda2_() {
    size_t n = dim();
    size_t n2 = n * n;
    // echelonize the relation vectors
    ScalarMat rel(spec_.lambda2_relations.size(), n2);
    for (size_t i = 0; i < spec_.lambda2_relations.size(); ++i) {
        if (spec_.lambda2_relations[i].size() != n2) throw InvalidFixture("relation length");
        for (size_t j = 0; j < n2; ++j) rel.at(i, j) = spec_.lambda2_relations[i][j];
    }
    std::vector<size_t> pivots = rref(rel);
    std::vector<bool> is_pivot(n2, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<Word> all2 = words_of(n, 2);
    std::vector<size_t> basis_pos(n2, SIZE_MAX);
    for (size_t j = 0; j < n2; ++j) {
        if (!is_pivot[j]) {
            basis_pos[j] = lambda2_basis_.size();
            lambda2_basis_.push_back(all2[j]);
        }
    }
    // pivot word j reduces to -sum of complement entries of its RREF row
    wedge_table_.assign(n2, {});
    for (size_t j = 0; j < n2; ++j) {
        if (!is_pivot[j]) {
            wedge_table_[j].emplace_back(basis_pos[j], Scalar::one());
        }
    }
    for (size_t r = 0; r < pivots.size(); ++r) {
        size_t pj = pivots[r];
        for (size_t j = 0; j < n2; ++j) {
            if (is_pivot[j] || rel.at(r, j).is_zero()) continue;
            wedge_table_[pj].emplace_back(basis_pos[j], -rel.at(r, j));
        }
    }
}

AlgebraElement Calculus::move_left(const Word& w, const AlgebraElement& a) const {
    AlgebraElement out = a;
    for (size_t i = w.size(); i-- > 0;) out = spec_.comm_auto.at(w[i]).apply(out);
    return out;
}

TensorForm Calculus::tensor_mul(const TensorForm& s, const TensorForm& t) const {
    TensorForm out;
    out.degree = s.degree + t.degree;
    for (auto& [w, a] : s.terms)
        for (auto& [u, b] : t.terms) {
            AlgebraElement coeff = algebra().mul(a, move_left(w, b));
            out.add_term(w + u, coeff);
        }
    return out;
}

TensorForm Calculus::mul_left(const AlgebraElement& a, const TensorForm& t) const {
    TensorForm out;
    out.degree = t.degree;
    for (auto& [w, b] : t.terms) out.add_term(w, algebra().mul(a, b));
    return out;
}

TensorForm Calculus::mul_right(const TensorForm& t, const AlgebraElement& a) const {
    TensorForm out;
    out.degree = t.degree;
    for (auto& [w, b] : t.terms) out.add_term(w, algebra().mul(b, move_left(w, a)));
    return out;
}

TensorForm Calculus::d_word(const Word& w) const {
    if (w.empty()) {
        TensorForm z;
        z.degree = 1;
        return z;
    }
    // d(x rest) = (dx) rest + x d(rest)
    Word head(1, w[0]);
    Word rest = w.substr(1);
    TensorForm out = mul_right(spec_.d_gen.at(w[0]), algebra().nf(rest));
    out = out + mul_left(algebra().nf(head), d_word(rest));
    return out;
}

TensorForm Calculus::differentiate(const AlgebraElement& a) const {
    TensorForm out;
    out.degree = 1;
    for (auto& [w, c] : a.terms()) {
        auto it = diff_cache_.find(w);
        if (it == diff_cache_.end()) {
            TensorForm dw;
            if (algebra().kind() == Algebra::Kind::StructureConstants) {
                dw = spec_.d_gen.at(w[0]);
            } else {
                dw = d_word(w);
            }
            it = diff_cache_.emplace(w, std::move(dw)).first;
        }
        out = out + it->second.scaled(c);
    }
    return out;
}

const std::vector<std::pair<size_t, Scalar>>& Calculus::wedge_pair(unsigned char i,
                                                                   unsigned char j) const {
    return wedge_table_.at(static_cast<size_t>(i) * dim() + j);
}

Lambda2Tensor Calculus::wedge_reduce(const TensorForm& t) const {
    if (!t.is_zero() && t.degree != 2) throw DegreeMismatch("wedge_reduce degree");
    Lambda2Tensor out;
    out.tail_degree = 0;
    for (auto& [w, c] : t.terms)
        for (auto& [idx, s] : wedge_pair(w[0], w[1])) out.add_term(idx, Word(), c.scaled(s));
    return out;
}

Lambda2Tensor Calculus::wedge_at(int slot, const TensorForm& t) const {
    int k = t.degree;
    if (slot < 1 || slot + 1 > k) throw SlotOutOfRange("wedge_at");
    Lambda2Tensor out;
    out.tail_degree = k - 2;
    for (auto& [w, c] : t.terms) {
        Word tail = w.substr(0, slot - 1) + w.substr(slot + 1);
        for (auto& [idx, s] : wedge_pair(w[slot - 1], w[slot]))
            out.add_term(idx, tail, c.scaled(s));
    }
    return out;
}

Lambda2Tensor Calculus::d_first(const TensorForm& t) const {
    Lambda2Tensor out;
    out.tail_degree = t.degree - 1;
    for (auto& [w, c] : t.terms) {
        TensorForm head = TensorForm::basis_word(Word(1, w[0]), c);
        Lambda2Tensor dh = d_oneform(head);
        Word tail = w.substr(1);
        for (auto& [k, a] : dh.terms) out.add_term(k.first, tail, a);
    }
    return out;
}

Lambda2Tensor Calculus::d_oneform(const TensorForm& t) const {
    if (!t.is_zero() && t.degree != 1) throw DegreeMismatch("d_oneform degree");
    Lambda2Tensor out;
    out.tail_degree = 0;
    for (auto& [w, c] : t.terms) {
        // (dc) wedge e^i
        TensorForm dc = differentiate(c);
        for (auto& [u, b] : dc.terms)
            for (auto& [idx, s] : wedge_pair(u[0], w[0])) out.add_term(idx, Word(), b.scaled(s));
        // + c d(e^i)
        for (auto& [k, a] : d_basis_reduced_.at(w[0]).terms)
            out.add_term(k.first, k.second, algebra().mul(c, a));
    }
    return out;
}

ScalarMat Calculus::wedge_matrix(int slot, int degree) const {
    size_t n = dim();
    std::vector<Word> cols = words_of(n, degree);
    size_t tail_count = 1;
    for (int i = 0; i < degree - 2; ++i) tail_count *= n;
    ScalarMat m(tail_count * lambda2_rank(), cols.size());
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const Word& w = cols[ci];
        Word tail = w.substr(0, slot - 1) + w.substr(slot + 1);
        size_t tail_idx = word_index(tail, n);
        for (auto& [idx, s] : wedge_pair(w[slot - 1], w[slot]))
            m.at(tail_idx * lambda2_rank() + idx, ci) += s;
    }
    return m;
}

CheckReport Calculus::validate() const {
    CheckReport report;
    const Algebra& A = algebra();

    report.merge(A.validate());
    for (const auto& phi : spec_.comm_auto) report.merge(phi.validate());

    // declared relations reduce to zero in Lambda^2
    {
        bool ok = true;
        std::string witness;
        size_t n = dim();
        for (size_t r = 0; r < spec_.lambda2_relations.size() && ok; ++r) {
            TensorForm t;
            t.degree = 2;
            const auto& vec = spec_.lambda2_relations[r];
            std::vector<Word> all2 = words_of(n, 2);
            for (size_t j = 0; j < vec.size(); ++j)
                t.add_term(all2[j], A.from_scalar(vec[j]));
            if (!wedge_reduce(t).is_zero()) {
                ok = false;
                witness = "relation " + std::to_string(r);
            }
        }
        report.add("lambda2_projection", ok, witness);
    }

    // d respects the algebra relations
    {
        bool ok = true;
        std::string witness;
        if (A.kind() == Algebra::Kind::Rewrite) {
            for (const auto& rule : A.rules()) {
                TensorForm lhs = d_word(rule.lhs);
                TensorForm rhs;
                rhs.degree = 1;
                for (auto& [w, c] : rule.rhs.terms()) rhs = rhs + d_word(w).scaled(c);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = word_str(rule.lhs, A.symbols());
                    break;
                }
            }
        } else {
            size_t n = A.symbol_count();
            for (size_t i = 0; i < n && ok; ++i)
                for (size_t j = 0; j < n && ok; ++j) {
                    TensorForm lhs = differentiate(A.table().product[i][j]);
                    TensorForm rhs = mul_right(spec_.d_gen.at(i), A.generator(j)) +
                                     mul_left(A.generator(i), spec_.d_gen.at(j));
                    if (!(lhs == rhs)) {
                        ok = false;
                        witness = A.symbols()[i] + "," + A.symbols()[j];
                    }
                }
            if (ok) {
                // d(1) = 0
                if (!differentiate(A.one()).is_zero()) {
                    ok = false;
                    witness = "unit";
                }
            }
        }
        report.add("leibniz_consistency", ok, witness);
    }

    // d^2 = 0 on generators
    {
        bool ok = true;
        std::string witness;
        for (size_t i = 0; i < A.symbol_count(); ++i) {
            if (!d_oneform(spec_.d_gen.at(i)).is_zero()) {
                ok = false;
                witness = A.symbols()[i];
                break;
            }
        }
        report.add("d_squared_zero", ok, witness);
    }

    // inner structure
    if (spec_.theta) {
        bool ok = true;
        std::string witness;
        const TensorForm& th = *spec_.theta;
        for (size_t i = 0; i < A.symbol_count(); ++i) {
            AlgebraElement g = A.generator(i);
            // d a = theta a - a theta
            TensorForm bracket = mul_right(th, g) - mul_left(g, th);
            if (!(differentiate(g) == bracket)) {
                ok = false;
                witness = "d " + A.symbols()[i];
                break;
            }
        }
        if (ok) {
            for (size_t i = 0; i < dim() && ok; ++i) {
                TensorForm ei = TensorForm::basis_word(Word(1, static_cast<unsigned char>(i)),
                                                       A.one());
                Lambda2Tensor lhs = d_basis_reduced_[i];
                Lambda2Tensor rhs = wedge_reduce(tensor_mul(th, ei) + tensor_mul(ei, th));
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "d " + spec_.basis_names[i];
                }
            }
        }
        report.add("inner_theta", ok, witness);
    }

    return report;
}

std::string Calculus::lambda2_basis_str(size_t index) const {
    const Word& w = lambda2_basis_.at(index);
    return spec_.basis_names[w[0]] + "^" + spec_.basis_names[w[1]];
}

std::string Calculus::str(const TensorForm& t) const {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [w, c] : t.terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << algebra().str(c) << ")";
        for (unsigned char i : w) out << "*" << spec_.basis_names[i];
    }
    return out.str();
}

std::string Calculus::str(const Lambda2Tensor& t) const {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : t.terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << algebra().str(c) << ")*" << lambda2_basis_str(k.first);
        for (unsigned char i : k.second) out << "*" << spec_.basis_names[i];
    }
    return out.str();
}

}  // namespace qjet
