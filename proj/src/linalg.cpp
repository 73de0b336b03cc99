#include "qjet/linalg.hpp"

#include <algorithm>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace qjet {

ScalarMat ScalarMat::identity(size_t n) {
    ScalarMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) throw DegreeMismatch("matrix product shape");
    ScalarMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

ScalarMat ScalarMat::operator+(const ScalarMat& o) const {
    ScalarMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

ScalarMat ScalarMat::operator-(const ScalarMat& o) const {
    ScalarMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

bool ScalarMat::operator==(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

bool ScalarMat::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

void ScalarMat::append_rows(const ScalarMat& o) {
    if (cols_ != o.cols_ && rows_ != 0) throw DegreeMismatch("append_rows shape");
    if (rows_ == 0) cols_ = o.cols_;
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
}

std::string ScalarMat::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]\n";
    }
    return out.str();
}

std::vector<size_t> rref(ScalarMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(ScalarMat m) { return rref(m).size(); }

std::vector<ScalarVec> kernel_basis(const ScalarMat& m) {
    ScalarMat r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ScalarVec v(m.cols(), Scalar::zero());
        v[free] = Scalar::one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ScalarVec> image_basis(const ScalarMat& m) {
    ScalarMat t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    std::vector<size_t> pivots = rref(t);
    std::vector<ScalarVec> basis;
    for (size_t i = 0; i < pivots.size(); ++i) {
        ScalarVec v(m.rows(), Scalar::zero());
        for (size_t j = 0; j < m.rows(); ++j) v[j] = t.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ScalarVec> solve(const ScalarMat& m, const ScalarVec& rhs) {
    if (rhs.size() != m.rows()) throw DegreeMismatch("solve rhs size");
    ScalarMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<size_t> pivots = rref(aug);
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    ScalarVec x(m.cols(), Scalar::zero());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::vector<Scalar> char_poly(const ScalarMat& m) {
    if (m.rows() != m.cols()) throw DegreeMismatch("char poly of non-square matrix");
    size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
    std::vector<Scalar> c(n + 1, Scalar::zero());
    c[n] = Scalar::one();
    ScalarMat mk = ScalarMat::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Scalar tr = Scalar::zero();
        for (size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Scalar ck = -(tr / Scalar(static_cast<long>(k)));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

namespace {

// Durand-Kerner root finder on complex doubles; good enough to suggest
// candidate roots that are then verified exactly.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& monic) {
    size_t n = monic.size() - 1;
    std::vector<std::complex<double>> roots(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1.0, 0.0);
    for (size_t i = 0; i < n; ++i) {
        p *= seed;
        roots[i] = p;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> val(monic[n]);
            for (size_t k = n; k-- > 0;) val = val * roots[i] + monic[k];
            std::complex<double> den(1.0, 0.0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= roots[i] - roots[j];
            if (std::abs(den) < 1e-300) den = 1e-300;
            std::complex<double> delta = val / den;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return roots;
}

// Best rational with denominator <= bound approximating x (continued fractions).
Rational rational_reconstruct(double x, long bound) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bound || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - fl;
        if (std::abs(frac) < 1e-12) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    r.canonicalize();
    return r;
}

// Divide monic-in-lead polynomial (Scalar coefficients) by (x - root) exactly;
// returns quotient if remainder is identically zero.
std::optional<std::vector<Scalar>> deflate(const std::vector<Scalar>& poly, const Cyclotomic& root) {
    size_t n = poly.size() - 1;
    std::vector<Scalar> q(n, Scalar::zero());
    Scalar r(root);
    q[n - 1] = poly[n];
    for (size_t k = n - 1; k > 0; --k) q[k - 1] = poly[k] + r * q[k];
    Scalar rem = poly[0] + r * q[0];
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

}  // namespace

std::vector<EigenValue> eigenvalues(const ScalarMat& m, unsigned field_order, uint64_t seed) {
    std::vector<Scalar> poly = char_poly(m);

    // find the parameters occurring anywhere in the polynomial
    std::vector<unsigned> vars;
    for (const auto& s : poly) {
        for (const Poly* p : {&s.num(), &s.den()}) {
            for (unsigned v : p->variables())
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
    }

    // specialize parameters at a seeded rational point to locate candidates
    std::mt19937_64 rng(seed);
    std::map<std::string, Cyclotomic> bindings;
    auto& table = ParamTable::instance();
    for (unsigned v : vars) {
        long num = 2 + static_cast<long>(rng() % 17);
        long den = 1 + static_cast<long>(rng() % 7);
        bindings.emplace(table.name(v), Cyclotomic(num, den));
    }

    std::vector<Cyclotomic> numeric(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        Scalar s = vars.empty() ? poly[i] : poly[i].eval(bindings);
        if (!s.is_constant()) throw NonSplitCharPoly("parametric coefficient survived specialization");
        numeric[i] = s.constant();
        field_order = std::lcm(field_order, numeric[i].order());
    }

    std::vector<std::complex<double>> monic(numeric.size());
    for (size_t i = 0; i < numeric.size(); ++i) monic[i] = numeric[i].to_complex();
    std::vector<std::complex<double>> raw_roots = numeric_roots(monic);

    // multiple roots jitter; cluster and average so the centers are
    // accurate enough for rational reconstruction
    std::vector<std::complex<double>> roots;
    std::vector<bool> used(raw_roots.size(), false);
    for (size_t i = 0; i < raw_roots.size(); ++i) {
        if (used[i]) continue;
        std::complex<double> sum = raw_roots[i];
        int count = 1;
        for (size_t j = i + 1; j < raw_roots.size(); ++j) {
            if (!used[j] && std::abs(raw_roots[j] - raw_roots[i]) < 1e-4) {
                used[j] = true;
                sum += raw_roots[j];
                ++count;
            }
        }
        roots.push_back(sum / static_cast<double>(count));
    }

    // rationalize candidates in Q(zeta_{field_order}) and verify symbolically
    unsigned phi = euler_phi(field_order);
    std::complex<double> zc =
        std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(field_order));

    std::vector<Scalar> remaining = poly;
    std::vector<EigenValue> out;
    for (const auto& root : roots) {
        if (remaining.size() <= 1) break;
        // express root ~= a0 + a1 zeta (phi <= 2 covers the supported orders;
        // higher orders attempted with basis 1..zeta^{phi-1} via least squares
        // only when phi <= 2, otherwise skipped and reported non-split)
        std::vector<Cyclotomic> candidates;
        for (long bound : {100L, 10000L, 1000000L}) {
            if (phi == 1) {
                candidates.push_back(Cyclotomic(rational_reconstruct(root.real(), bound)));
            } else if (phi == 2) {
                double b = root.imag() / zc.imag();
                double a = root.real() - b * zc.real();
                Rational ra = rational_reconstruct(a, bound);
                Rational rb = rational_reconstruct(b, bound);
                candidates.push_back(Cyclotomic(ra) +
                                     Cyclotomic(rb) * Cyclotomic::zeta(field_order));
            } else {
                throw NonSplitCharPoly("cyclotomic order with phi > 2 not supported");
            }
        }
        // verify and deflate as many times as a verified candidate divides
        for (const Cyclotomic& candidate : candidates) {
            bool verified = false;
            while (remaining.size() > 1) {
                auto q = deflate(remaining, candidate);
                if (!q) break;
                verified = true;
                remaining = std::move(*q);
                bool found = false;
                for (auto& ev : out) {
                    if (ev.value == candidate) { ev.multiplicity++; found = true; break; }
                }
                if (!found) out.push_back({candidate, 1});
            }
            if (verified) break;
        }
    }
    if (remaining.size() > 1) {
        std::ostringstream os;
        os << "stuck factor of degree " << remaining.size() - 1 << ": ";
        for (size_t i = 0; i < remaining.size(); ++i)
            os << (i ? " + " : "") << "(" << remaining[i].str() << ")x^" << i;
        throw NonSplitCharPoly(os.str());
    }
    std::sort(out.begin(), out.end(), [](const EigenValue& a, const EigenValue& b) {
        return a.value < b.value;
    });
    return out;
}

}  // namespace qjet
