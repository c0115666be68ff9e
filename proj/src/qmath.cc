// Copyright 2026 The chainbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainbell/qmath.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chainbell/kernels.h"

namespace chainbell {

namespace {

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

double max_abs_entry(const CMat &m) {
    double best = 0;
    for (size_t k = 0; k < m.rows() * m.cols(); k++) {
        best = std::max(best, std::abs(m.data()[k]));
    }
    return best;
}

}  // namespace

CVec::CVec(size_t dim) : data_(dim, cplx{0, 0}) {
}

CVec::CVec(std::initializer_list<cplx> entries) : data_(entries) {
}

CVec::CVec(std::vector<cplx> entries) : data_(std::move(entries)) {
}

CVec CVec::basis(size_t dim, size_t k) {
    require(k < dim, "basis index out of range");
    CVec v(dim);
    v[k] = 1;
    return v;
}

CVec &CVec::operator+=(const CVec &other) {
    require(dim() == other.dim(), "vector dimension mismatch");
    for (size_t k = 0; k < dim(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CVec &CVec::operator-=(const CVec &other) {
    require(dim() == other.dim(), "vector dimension mismatch");
    for (size_t k = 0; k < dim(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CVec &CVec::operator*=(cplx s) {
    for (auto &x : data_) {
        x *= s;
    }
    return *this;
}

CVec operator+(CVec a, const CVec &b) {
    a += b;
    return a;
}

CVec operator-(CVec a, const CVec &b) {
    a -= b;
    return a;
}

CVec operator*(cplx s, CVec v) {
    v *= s;
    return v;
}

CMat::CMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, cplx{0, 0}) {
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        require(row.size() == cols_, "ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMat CMat::identity(size_t n) {
    CMat m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

CMat CMat::zeros(size_t rows, size_t cols) {
    return CMat(rows, cols);
}

CMat &CMat::operator+=(const CMat &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix dimension mismatch");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMat &CMat::operator-=(const CMat &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix dimension mismatch");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMat &CMat::operator*=(cplx s) {
    for (auto &x : data_) {
        x *= s;
    }
    return *this;
}

CMat operator+(CMat a, const CMat &b) {
    a += b;
    return a;
}

CMat operator-(CMat a, const CMat &b) {
    a -= b;
    return a;
}

CMat operator-(CMat a) {
    a *= -1.0;
    return a;
}

CMat operator*(cplx s, CMat m) {
    m *= s;
    return m;
}

CMat operator*(const CMat &a, const CMat &b) {
    return matmul(a, b);
}

CMat matmul(const CMat &a, const CMat &b) {
    require(a.cols() == b.rows(), "matmul dimension mismatch");
    CMat c(a.rows(), b.cols());
    kernels::active().gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            cplx s = a(i, j);
            if (s == cplx{0, 0}) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
                }
            }
        }
    }
    return out;
}

CVec kron(const CVec &a, const CVec &b) {
    CVec out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t k = 0; k < b.dim(); k++) {
            out[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return out;
}

CMat adjoint(const CMat &m) {
    CMat out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

cplx trace(const CMat &m) {
    require(m.is_square(), "trace of non-square matrix");
    cplx t = 0;
    for (size_t k = 0; k < m.rows(); k++) {
        t += m(k, k);
    }
    return t;
}

CVec op_apply(const CMat &m, const CVec &v) {
    require(m.cols() == v.dim(), "op_apply dimension mismatch");
    CVec out(m.rows());
    kernels::active().gemv(m.data(), v.data(), out.data(), m.rows(), m.cols());
    return out;
}

cplx inner(const CVec &u, const CVec &v) {
    require(u.dim() == v.dim(), "inner product dimension mismatch");
    return kernels::active().dotc(u.data(), v.data(), u.dim());
}

double vec_norm(const CVec &v) {
    double s = 0;
    for (size_t k = 0; k < v.dim(); k++) {
        s += std::norm(v[k]);
    }
    return std::sqrt(s);
}

CVec normalized(const CVec &v) {
    double n = vec_norm(v);
    if (n == 0) {
        throw NumericError("cannot normalize the zero vector");
    }
    return (1.0 / n) * v;
}

cplx expectation(const CMat &m, const CVec &v) {
    return inner(v, op_apply(m, v));
}

CMat outer(const CVec &u, const CVec &v) {
    CMat out(u.dim(), v.dim());
    for (size_t i = 0; i < u.dim(); i++) {
        for (size_t j = 0; j < v.dim(); j++) {
            out(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return out;
}

double frobenius_norm(const CMat &m) {
    double s = 0;
    for (size_t k = 0; k < m.rows() * m.cols(); k++) {
        s += std::norm(m.data()[k]);
    }
    return std::sqrt(s);
}

double max_abs_diff(const CMat &a, const CMat &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix dimension mismatch");
    double best = 0;
    for (size_t k = 0; k < a.rows() * a.cols(); k++) {
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    }
    return best;
}

double max_abs_diff(const CVec &a, const CVec &b) {
    require(a.dim() == b.dim(), "vector dimension mismatch");
    double best = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        best = std::max(best, std::abs(a[k] - b[k]));
    }
    return best;
}

double hermiticity_defect(const CMat &m) {
    require(m.is_square(), "hermiticity of non-square matrix");
    double best = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = i; j < m.cols(); j++) {
            best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return best;
}

bool is_hermitian(const CMat &m, double tol) {
    return m.is_square() && hermiticity_defect(m) <= tol;
}

bool is_involutory(const CMat &m, double tol) {
    if (!is_hermitian(m, tol)) {
        return false;
    }
    return max_abs_diff(m * m, CMat::identity(m.rows())) <= tol;
}

CMat hermitian_part(const CMat &m) {
    require(m.is_square(), "hermitian part of non-square matrix");
    CMat out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    return out;
}

CMat anticommutator(const CMat &a, const CMat &b) {
    return a * b + b * a;
}

CMat commutator(const CMat &a, const CMat &b) {
    return a * b - b * a;
}

// Cyclic complex Jacobi. Each rotation first removes the phase of a_pq
// with a diagonal unitary, then applies a real Givens rotation.
std::vector<EigenPair> hermitian_eig(const CMat &m) {
    require(m.is_square() && m.rows() > 0, "hermitian_eig needs a non-empty square matrix");
    double scale = std::max(1.0, max_abs_entry(m));
    if (hermiticity_defect(m) > 1e-10 * scale) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    }
    const size_t n = m.rows();
    CMat a = hermitian_part(m);
    CMat v = CMat::identity(n);

    auto off_norm2 = [&]() {
        double s = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                s += std::norm(a(p, q));
            }
        }
        return s;
    };
    double total = frobenius_norm(a);
    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; sweep++) {
        double off = off_norm2();
        if (off == 0 || std::sqrt(off) <= 1e-15 * total) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                cplx apq = a(p, q);
                double r = std::abs(apq);
                if (r == 0) {
                    continue;
                }
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                if (r <= 1e-300 || (sweep > 3 && r <= 1e-18 * (std::abs(app) + std::abs(aqq)))) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                cplx phase_conj = std::conj(apq) / r;
                double theta = (aqq - app) / (2 * r);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1));
                    if (theta < 0) {
                        t = -t;
                    }
                }
                double c = 1.0 / std::sqrt(t * t + 1);
                double s = t * c;
                cplx gpp = c;
                cplx gpq = s;
                cplx gqp = -s * phase_conj;
                cplx gqq = c * phase_conj;
                for (size_t k = 0; k < n; k++) {
                    cplx akp = a(k, p);
                    cplx akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx apk = a(p, k);
                    cplx aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t k = 0; k < n; k++) {
                    cplx vkp = v(k, p);
                    cplx vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }
    if (sweep == max_sweeps) {
        throw NumericError("hermitian_eig: Jacobi iteration did not converge");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    std::vector<EigenPair> out;
    out.reserve(n);
    for (size_t idx : order) {
        CVec col(n);
        for (size_t k = 0; k < n; k++) {
            col[k] = v(k, idx);
        }
        out.push_back({a(idx, idx).real(), std::move(col)});
    }
    return out;
}

CMat herm_sign(const CMat &m) {
    auto eig = hermitian_eig(m);
    double scale = 1;
    for (const auto &e : eig) {
        scale = std::max(scale, std::abs(e.value));
    }
    const size_t n = m.rows();
    CMat out(n, n);
    for (const auto &e : eig) {
        double sgn = e.value >= -1e-13 * scale ? 1.0 : -1.0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                out(i, j) += sgn * e.vector[i] * std::conj(e.vector[j]);
            }
        }
    }
    return hermitian_part(out);
}

CMat partial_trace_B(const CMat &m, size_t dim_a, size_t dim_b) {
    require(m.is_square() && m.rows() == dim_a * dim_b, "partial_trace_B: inconsistent dimensions");
    CMat out(dim_a, dim_a);
    for (size_t i = 0; i < dim_a; i++) {
        for (size_t j = 0; j < dim_a; j++) {
            cplx s = 0;
            for (size_t k = 0; k < dim_b; k++) {
                s += m(i * dim_b + k, j * dim_b + k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

CMat partial_trace_A(const CMat &m, size_t dim_a, size_t dim_b) {
    require(m.is_square() && m.rows() == dim_a * dim_b, "partial_trace_A: inconsistent dimensions");
    CMat out(dim_b, dim_b);
    for (size_t k = 0; k < dim_b; k++) {
        for (size_t l = 0; l < dim_b; l++) {
            cplx s = 0;
            for (size_t i = 0; i < dim_a; i++) {
                s += m(i * dim_b + k, i * dim_b + l);
            }
            out(k, l) = s;
        }
    }
    return out;
}

namespace pauli {

CMat I2() {
    return CMat::identity(2);
}

CMat X() {
    return CMat{{0, 1}, {1, 0}};
}

CMat Y() {
    return CMat{{0, cplx{0, -1}}, {cplx{0, 1}, 0}};
}

CMat Z() {
    return CMat{{1, 0}, {0, -1}};
}

}  // namespace pauli

CVec maximally_entangled(size_t d) {
    require(d > 0, "maximally_entangled: dimension must be positive");
    CVec v(d * d);
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (size_t k = 0; k < d; k++) {
        v[k * d + k] = amp;
    }
    return v;
}

std::string to_string(const CMat &m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out << (j ? " " : "") << m(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace chainbell
