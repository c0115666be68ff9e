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

#ifndef CHAINBELL_QMATH_H
#define CHAINBELL_QMATH_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainbell {

using cplx = std::complex<double>;

/// Raised when an internal numerical precondition fails (as opposed to bad
/// caller input, which raises std::invalid_argument).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense complex vector.
class CVec {
   public:
    CVec() = default;
    explicit CVec(size_t dim);
    CVec(std::initializer_list<cplx> entries);
    explicit CVec(std::vector<cplx> entries);

    size_t dim() const {
        return data_.size();
    }
    cplx &operator[](size_t k) {
        return data_[k];
    }
    const cplx &operator[](size_t k) const {
        return data_[k];
    }
    cplx *data() {
        return data_.data();
    }
    const cplx *data() const {
        return data_.data();
    }
    const std::vector<cplx> &entries() const {
        return data_;
    }

    /// Computational basis vector |k> in dimension dim.
    static CVec basis(size_t dim, size_t k);

    CVec &operator+=(const CVec &other);
    CVec &operator-=(const CVec &other);
    CVec &operator*=(cplx s);

   private:
    std::vector<cplx> data_;
};

CVec operator+(CVec a, const CVec &b);
CVec operator-(CVec a, const CVec &b);
CVec operator*(cplx s, CVec v);

/// Dense complex matrix in row-major order.
class CMat {
   public:
    CMat() = default;
    CMat(size_t rows, size_t cols);
    /// Row-wise construction: {{a, b}, {c, d}}.
    CMat(std::initializer_list<std::initializer_list<cplx>> rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    cplx &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    cplx *data() {
        return data_.data();
    }
    const cplx *data() const {
        return data_.data();
    }

    static CMat identity(size_t n);
    static CMat zeros(size_t rows, size_t cols);

    CMat &operator+=(const CMat &other);
    CMat &operator-=(const CMat &other);
    CMat &operator*=(cplx s);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMat operator+(CMat a, const CMat &b);
CMat operator-(CMat a, const CMat &b);
CMat operator-(CMat a);
CMat operator*(cplx s, CMat m);
CMat operator*(const CMat &a, const CMat &b);

CMat matmul(const CMat &a, const CMat &b);
CMat kron(const CMat &a, const CMat &b);
CVec kron(const CVec &a, const CVec &b);
CMat adjoint(const CMat &m);
cplx trace(const CMat &m);
CVec op_apply(const CMat &m, const CVec &v);

/// <u|v>, antilinear in u.
cplx inner(const CVec &u, const CVec &v);
double vec_norm(const CVec &v);
CVec normalized(const CVec &v);
/// <v|M|v>.
cplx expectation(const CMat &m, const CVec &v);
/// |u><v|.
CMat outer(const CVec &u, const CVec &v);

double frobenius_norm(const CMat &m);
/// Largest entrywise |a - b|.
double max_abs_diff(const CMat &a, const CMat &b);
double max_abs_diff(const CVec &a, const CVec &b);
/// Largest entrywise |M - M^dagger|.
double hermiticity_defect(const CMat &m);
bool is_hermitian(const CMat &m, double tol = 1e-12);
/// True when M is Hermitian and M^2 == I entrywise to tol.
bool is_involutory(const CMat &m, double tol = 1e-10);
CMat hermitian_part(const CMat &m);
CMat anticommutator(const CMat &a, const CMat &b);
CMat commutator(const CMat &a, const CMat &b);

struct EigenPair {
    double value;
    CVec vector;
};

/// Eigendecomposition of a Hermitian matrix, sorted by descending eigenvalue.
/// Inputs must be Hermitian to 1e-10; they are symmetrized before solving.
std::vector<EigenPair> hermitian_eig(const CMat &m);

/// Hermitian matrix sign: sum of sgn(lambda) v v^dagger, with sgn(0) = +1.
CMat herm_sign(const CMat &m);

CMat partial_trace_B(const CMat &m, size_t dim_a, size_t dim_b);
CMat partial_trace_A(const CMat &m, size_t dim_a, size_t dim_b);

namespace pauli {
CMat I2();
CMat X();
CMat Y();
CMat Z();
}  // namespace pauli

/// (|00> + |11>)/sqrt(2) generalised to (1/sqrt(d)) sum_k |kk>.
CVec maximally_entangled(size_t d);

std::string to_string(const CMat &m);

}  // namespace chainbell

#endif
