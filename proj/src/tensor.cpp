#include "qjet/tensor.hpp"

namespace qjet {

void TensorForm::add_term(const Word& w, const AlgebraElement& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorForm TensorForm::operator+(const TensorForm& o) const {
    if (!is_zero() && !o.is_zero() && degree != o.degree)
        throw DegreeMismatch("tensor form addition");
    TensorForm r = *this;
    if (r.is_zero()) r.degree = o.degree;
    for (auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

TensorForm TensorForm::operator-(const TensorForm& o) const { return *this + (-o); }

TensorForm TensorForm::operator-() const {
    TensorForm r;
    r.degree = degree;
    for (auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
}

TensorForm TensorForm::scaled(const Scalar& c) const {
    TensorForm r;
    r.degree = degree;
    if (c.is_zero()) return r;
    for (auto& [w, x] : terms) {
        AlgebraElement s = x.scaled(c);
        if (!s.is_zero()) r.terms.emplace(w, s);
    }
    return r;
}

std::vector<Word> words_of(size_t dim, size_t length) {
    std::vector<Word> out;
    Word w(length, 0);
    while (true) {
        out.push_back(w);
        size_t i = length;
        while (i > 0) {
            if (static_cast<size_t>(w[i - 1]) + 1 < dim) {
                w[i - 1]++;
                break;
            }
            w[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

size_t word_index(const Word& w, size_t dim) {
    size_t idx = 0;
    for (unsigned char c : w) idx = idx * dim + c;
    return idx;
}

ScalarTensorMap ScalarTensorMap::identity(size_t dim, int degree) {
    ScalarTensorMap m(dim, degree, degree);
    for (const Word& w : words_of(dim, degree)) m.cols_[w].emplace(w, Scalar::one());
    return m;
}

ScalarTensorMap ScalarTensorMap::from_degree2_table(
    size_t dim, const std::map<Word, std::vector<std::pair<Word, Scalar>>>& table) {
    ScalarTensorMap m(dim, 2, 2);
    for (auto& [w, images] : table) {
        auto& col = m.cols_[w];
        for (auto& [u, s] : images) {
            if (s.is_zero()) continue;
            col[u] += s;
            if (col[u].is_zero()) col.erase(u);
        }
    }
    return m;
}

ScalarTensorMap ScalarTensorMap::embed_at(const ScalarTensorMap& sigma2, int slot, int degree) {
    if (slot < 1 || slot + 1 > degree) throw SlotOutOfRange("embed_at slot");
    size_t dim = sigma2.dim();
    ScalarTensorMap m(dim, degree, degree);
    for (const Word& w : words_of(dim, degree)) {
        Word pair;
        pair.push_back(w[slot - 1]);
        pair.push_back(w[slot]);
        auto it = sigma2.cols_.find(pair);
        if (it == sigma2.cols_.end()) continue;
        auto& col = m.cols_[w];
        for (auto& [u, s] : it->second) {
            Word out = w;
            out[slot - 1] = u[0];
            out[slot] = u[1];
            col[out] += s;
            if (col[out].is_zero()) col.erase(out);
        }
    }
    return m;
}

void ScalarTensorMap::set_column(const Word& w, std::vector<std::pair<Word, Scalar>> images) {
    auto& col = cols_[w];
    col.clear();
    for (auto& [u, s] : images) {
        if (s.is_zero()) continue;
        col[u] += s;
        if (col[u].is_zero()) col.erase(u);
    }
}

std::vector<std::pair<Word, Scalar>> ScalarTensorMap::column(const Word& w) const {
    auto it = cols_.find(w);
    if (it == cols_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

TensorForm ScalarTensorMap::apply(const TensorForm& t) const {
    if (!t.is_zero() && t.degree != src_) throw DegreeMismatch("apply_map degree");
    TensorForm out;
    out.degree = dst_;
    for (auto& [w, coeff] : t.terms) {
        auto it = cols_.find(w);
        if (it == cols_.end()) continue;
        for (auto& [u, s] : it->second) out.add_term(u, coeff.scaled(s));
    }
    return out;
}

ScalarTensorMap ScalarTensorMap::compose(const ScalarTensorMap& other) const {
    if (other.dst_ != src_) throw DegreeMismatch("compose degrees");
    ScalarTensorMap m(dim_, other.src_, dst_);
    for (auto& [w, col] : other.cols_) {
        std::map<Word, Scalar> acc;
        for (auto& [u, s] : col) {
            auto it = cols_.find(u);
            if (it == cols_.end()) continue;
            for (auto& [v, s2] : it->second) {
                acc[v] += s * s2;
                if (acc[v].is_zero()) acc.erase(v);
            }
        }
        if (!acc.empty()) m.cols_[w] = std::move(acc);
    }
    return m;
}

ScalarTensorMap ScalarTensorMap::operator+(const ScalarTensorMap& o) const {
    if (src_ != o.src_ || dst_ != o.dst_) throw DegreeMismatch("map addition");
    ScalarTensorMap m = *this;
    for (auto& [w, col] : o.cols_) {
        auto& dst = m.cols_[w];
        for (auto& [u, s] : col) {
            dst[u] += s;
            if (dst[u].is_zero()) dst.erase(u);
        }
    }
    return m;
}

ScalarTensorMap ScalarTensorMap::operator-(const ScalarTensorMap& o) const {
    return *this + o.scaled(Scalar(-1));
}

ScalarTensorMap ScalarTensorMap::scaled(const Scalar& c) const {
    ScalarTensorMap m(dim_, src_, dst_);
    if (c.is_zero()) return m;
    for (auto& [w, col] : cols_) {
        auto& dst = m.cols_[w];
        for (auto& [u, s] : col) dst.emplace(u, s * c);
    }
    return m;
}

bool ScalarTensorMap::is_zero() const {
    for (auto& [w, col] : cols_)
        for (auto& [u, s] : col)
            if (!s.is_zero()) return false;
    return true;
}

bool ScalarTensorMap::operator==(const ScalarTensorMap& o) const {
    return !first_difference(o).has_value();
}

std::optional<Word> ScalarTensorMap::first_difference(const ScalarTensorMap& o) const {
    for (const Word& w : words_of(dim_, src_)) {
        auto a = cols_.find(w);
        auto b = o.cols_.find(w);
        static const std::map<Word, Scalar> empty;
        const auto& ca = a == cols_.end() ? empty : a->second;
        const auto& cb = b == o.cols_.end() ? empty : b->second;
        std::map<Word, Scalar> diff = ca;
        for (auto& [u, s] : cb) {
            diff[u] -= s;
        }
        for (auto& [u, s] : diff)
            if (!s.is_zero()) return w;
    }
    return std::nullopt;
}

std::vector<std::vector<Scalar>> ScalarTensorMap::to_rows() const {
    size_t ncols = 1, nrows = 1;
    for (int i = 0; i < src_; ++i) ncols *= dim_;
    for (int i = 0; i < dst_; ++i) nrows *= dim_;
    std::vector<std::vector<Scalar>> rows(nrows, std::vector<Scalar>(ncols, Scalar::zero()));
    for (auto& [w, col] : cols_) {
        size_t ci = word_index(w, dim_);
        for (auto& [u, s] : col) rows[word_index(u, dim_)][ci] = s;
    }
    return rows;
}

}  // namespace qjet
