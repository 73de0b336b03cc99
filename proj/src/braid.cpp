#include "qjet/braid.hpp"

namespace qjet {

ScalarMat rows_to_mat(const std::vector<std::vector<Scalar>>& rows) {
    ScalarMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

BraidOperator::BraidOperator(size_t dim, ScalarTensorMap sigma2)
    : dim_(dim), sigma2_(std::move(sigma2)) {
    if (sigma2_.src_degree() != 2 || sigma2_.dst_degree() != 2)
        throw DegreeMismatch("braiding must act on degree 2");
}

const ScalarTensorMap& BraidOperator::sigma_at(int slot, int degree) const {
    auto key = std::make_pair(slot, degree);
    auto it = sigma_at_cache_.find(key);
    if (it == sigma_at_cache_.end())
        it = sigma_at_cache_.emplace(key, ScalarTensorMap::embed_at(sigma2_, slot, degree)).first;
    return it->second;
}

const ScalarTensorMap& BraidOperator::cascade(int m, int degree) const {
    auto key = std::make_pair(m, degree);
    auto it = cascade_cache_.find(key);
    if (it != cascade_cache_.end()) return it->second;
    // sigma_1 ... sigma_m with sigma_m applied first
    ScalarTensorMap acc = ScalarTensorMap::identity(dim_, degree);
    for (int i = m; i >= 1; --i) acc = sigma_at(i, degree).compose(acc);
    return cascade_cache_.emplace(key, std::move(acc)).first->second;
}

const ScalarTensorMap& BraidOperator::binomial(int n, int k) const {
    if (k < 0 || k > n || n < 0) throw IndexOutOfRange("binomial arguments");
    auto key = std::make_pair(n, k);
    auto it = binomial_cache_.find(key);
    if (it != binomial_cache_.end()) return it->second;
    ScalarTensorMap result;
    if (k == 0 || k == n) {
        result = ScalarTensorMap::identity(dim_, n);
    } else {
        // (id (x) [n-1 | k-1]) sigma_1...sigma_{n-k} + (id (x) [n-1 | k])
        auto promote = [&](const ScalarTensorMap& m) {
            // id on the first slot, m on the remaining n-1
            ScalarTensorMap out(dim_, n, n);
            for (const Word& w : words_of(dim_, n)) {
                Word tail = w.substr(1);
                std::vector<std::pair<Word, Scalar>> images;
                for (auto& [u, s] : m.column(tail)) images.emplace_back(Word(1, w[0]) + u, s);
                out.set_column(w, std::move(images));
            }
            return out;
        };
        ScalarTensorMap first = promote(binomial(n - 1, k - 1)).compose(cascade(n - k, n));
        ScalarTensorMap second = promote(binomial(n - 1, k));
        result = first + second;
    }
    return binomial_cache_.emplace(key, std::move(result)).first->second;
}

const ScalarTensorMap& BraidOperator::factorial(int n) const {
    if (n < 1) throw IndexOutOfRange("factorial degree");
    auto it = factorial_cache_.find(n);
    if (it != factorial_cache_.end()) return it->second;
    ScalarTensorMap result;
    if (n == 1) {
        result = ScalarTensorMap::identity(dim_, 1);
    } else {
        // [n, sigma] ([n-1, sigma]! (x) id)
        const ScalarTensorMap& prev = factorial(n - 1);
        ScalarTensorMap ext(dim_, n, n);
        for (const Word& w : words_of(dim_, n)) {
            Word headw = w.substr(0, n - 1);
            std::vector<std::pair<Word, Scalar>> images;
            for (auto& [u, s] : prev.column(headw)) images.emplace_back(u + Word(1, w[n - 1]), s);
            ext.set_column(w, std::move(images));
        }
        result = binomial(n, 1).compose(ext);
    }
    return factorial_cache_.emplace(n, std::move(result)).first->second;
}

CheckReport BraidOperator::check_ybe() const {
    CheckReport report;
    ScalarTensorMap lhs = sigma_at(1, 3).compose(sigma_at(2, 3)).compose(sigma_at(1, 3));
    ScalarTensorMap rhs = sigma_at(2, 3).compose(sigma_at(1, 3)).compose(sigma_at(2, 3));
    auto diff = lhs.first_difference(rhs);
    std::string witness;
    if (diff) {
        witness = "word";
        for (unsigned char c : *diff) witness += " " + std::to_string(c);
    }
    report.add("ybe", !diff.has_value(), witness);
    return report;
}

CheckReport BraidOperator::binomial_identity_check(int n, int k, int m) const {
    if (!(n >= k && k >= m)) throw IndexOutOfRange("binomial identity arguments");
    CheckReport report;
    // [n|k](id^{n-k} (x) [k|m]) = [n|m]([n-m|k-m] (x) id^m)
    ScalarTensorMap right_inner(dim_, n, n);
    for (const Word& w : words_of(dim_, n)) {
        Word head = w.substr(0, n - k), tail = w.substr(n - k);
        std::vector<std::pair<Word, Scalar>> images;
        for (auto& [u, s] : binomial(k, m).column(tail)) images.emplace_back(head + u, s);
        right_inner.set_column(w, std::move(images));
    }
    ScalarTensorMap lhs = binomial(n, k).compose(right_inner);

    ScalarTensorMap left_inner(dim_, n, n);
    for (const Word& w : words_of(dim_, n)) {
        Word head = w.substr(0, n - m), tail = w.substr(n - m);
        std::vector<std::pair<Word, Scalar>> images;
        for (auto& [u, s] : binomial(n - m, k - m).column(head)) images.emplace_back(u + tail, s);
        left_inner.set_column(w, std::move(images));
    }
    ScalarTensorMap rhs = binomial(n, m).compose(left_inner);

    auto diff = lhs.first_difference(rhs);
    std::string witness;
    if (diff) {
        witness = "word";
        for (unsigned char c : *diff) witness += " " + std::to_string(c);
    }
    report.add("binomial_identity(" + std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(m) + ")",
               !diff.has_value(), witness);
    return report;
}

BraidOperator::SymData BraidOperator::sym_rank_and_kernel(int k) const {
    ScalarMat m = rows_to_mat(factorial(k).to_rows());
    SymData data;
    data.kernel = kernel_basis(m);
    size_t n_k = 1;
    for (int i = 0; i < k; ++i) n_k *= dim_;
    data.rank = n_k - data.kernel.size();
    return data;
}

std::vector<EigenValue> BraidOperator::eigen_structure(unsigned field_order) const {
    return eigenvalues(rows_to_mat(sigma2_.to_rows()), field_order);
}

CheckReport validate_braiding_bimodule(const Calculus& calc, const ScalarTensorMap& sigma2) {
    CheckReport report;
    bool ok = true;
    std::string witness;
    const Algebra& A = calc.algebra();
    for (const Word& w : words_of(calc.dim(), 2)) {
        for (auto& [u, s] : sigma2.column(w)) {
            for (size_t g = 0; g < A.symbol_count() && ok; ++g) {
                AlgebraElement x = A.generator(g);
                AlgebraElement lhs = calc.move_left(w, x);
                AlgebraElement rhs = calc.move_left(u, x);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "sigma(" + calc.basis_names()[w[0]] + "," + calc.basis_names()[w[1]] +
                              ") -> (" + calc.basis_names()[u[0]] + "," + calc.basis_names()[u[1]] +
                              ") on " + A.symbols()[g];
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    report.add("braiding_bimodule", ok, witness);
    return report;
}

}  // namespace qjet
