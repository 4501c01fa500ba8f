// Copyright 2026 The qstate Authors.
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

#include "qstate/types.hpp"

#include <algorithm>
#include <cmath>

#include "qstate/hermitian_eig.hpp"
#include "qstate/kernels.hpp"

namespace qstate {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::structure_mismatch: return "structure-mismatch";
        case ErrorKind::degenerate_trace: return "degenerate-trace";
        case ErrorKind::non_unitary: return "non-unitary";
        case ErrorKind::zero_probability_event: return "zero-probability-event";
        case ErrorKind::subject_object_overlap: return "subject-object-overlap";
        case ErrorKind::not_a_partition: return "not-a-partition";
        case ErrorKind::degenerate_slit: return "degenerate-slit";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

HilbertStructure::HilbertStructure(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw Error(ErrorKind::invalid_argument, "structure needs at least one subsystem");
    total_dim_ = 1;
    for (std::size_t d : dims_) {
        if (d < 2)
            throw Error(ErrorKind::invalid_argument, "subsystem dimension must be >= 2");
        total_dim_ *= d;
    }
}

std::size_t HilbertStructure::stride(std::size_t k) const {
    std::size_t s = 1;
    for (std::size_t j = k + 1; j < dims_.size(); ++j)
        s *= dims_[j];
    return s;
}

std::size_t HilbertStructure::flatten(std::span<const std::size_t> multi) const {
    if (multi.size() != dims_.size())
        throw Error(ErrorKind::structure_mismatch, "multi-index arity does not match structure");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (multi[k] >= dims_[k])
            throw Error(ErrorKind::invalid_argument, "multi-index digit out of range");
        flat = flat * dims_[k] + multi[k];
    }
    return flat;
}

std::vector<std::size_t> HilbertStructure::unflatten(std::size_t flat) const {
    if (flat >= total_dim_)
        throw Error(ErrorKind::invalid_argument, "flat index out of range");
    std::vector<std::size_t> multi(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        multi[k] = flat % dims_[k];
        flat /= dims_[k];
    }
    return multi;
}

HilbertStructure HilbertStructure::subset(std::span<const std::size_t> keep) const {
    std::vector<std::size_t> sub;
    sub.reserve(keep.size());
    for (std::size_t k : keep) {
        if (k >= dims_.size())
            throw Error(ErrorKind::invalid_argument, "subsystem index out of range");
        sub.push_back(dims_[k]);
    }
    return HilbertStructure(std::move(sub));
}

HilbertStructure HilbertStructure::concat(const HilbertStructure& a, const HilbertStructure& b) {
    std::vector<std::size_t> dims = a.dims_;
    dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
    return HilbertStructure(std::move(dims));
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::structure_mismatch, "matrix shape mismatch in addition");
    kernels::axpy(1.0, other.data(), data(), size());
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::structure_mismatch, "matrix shape mismatch in subtraction");
    kernels::axpy(-1.0, other.data(), data(), size());
    return *this;
}

CMatrix& CMatrix::operator*=(cplx alpha) {
    kernels::scale(alpha, data(), size());
    return *this;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> x) const {
    if (x.size() != cols_)
        throw Error(ErrorKind::structure_mismatch, "matrix-vector dimension mismatch");
    std::vector<cplx> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        y[i] = kernels::dot(row(i), x.data(), cols_);
    return y;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::structure_mismatch, "matrix shape mismatch in product");
    CMatrix c(a.rows(), b.cols());
    // c[i,:] += a[i,k] * b[k,:]
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            kernels::axpy(a(i, k), b.row(k), c.row(i), b.cols());
    return c;
}

CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
}

CMatrix operator*(cplx alpha, CMatrix m) {
    m *= alpha;
    return m;
}

CMatrix outer(std::span<const cplx> a, std::span<const cplx> b) {
    CMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        kernels::axpy_conj(a[i], b.data(), m.row(i), b.size());
    return m;
}

double max_abs(const CMatrix& m) {
    double out = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        out = std::max(out, std::abs(m.data()[i]));
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::structure_mismatch, "matrix shape mismatch in comparison");
    return max_abs_diff(std::span<const cplx>(a.data(), a.size()),
                        std::span<const cplx>(b.data(), b.size()));
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::structure_mismatch, "vector length mismatch in comparison");
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

double hermiticity_deviation(const CMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::invalid_argument, "hermiticity check needs a square matrix");
    double out = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            out = std::max(out, std::abs(m(i, j) - std::conj(m(j, i))));
    return out;
}

double RawVector::norm() const {
    return std::sqrt(kernels::norm_sq(amplitudes.data(), amplitudes.size()));
}

double StateVector::norm() const {
    return std::sqrt(kernels::norm_sq(amplitudes.data(), amplitudes.size()));
}

DensityOperator pure_density(const StateVector& psi) {
    return {psi.structure, outer(psi.amplitudes, psi.amplitudes)};
}

StateVector normalized(const RawVector& v) {
    const double n = v.norm();
    if (n <= std::sqrt(tol::prob))
        throw Error(ErrorKind::zero_probability_event, "cannot normalize a (near-)zero vector");
    std::vector<cplx> amps = v.amplitudes;
    kernels::scale(1.0 / n, amps.data(), amps.size());
    return {v.structure, std::move(amps)};
}

StateVector canonical_phase(const StateVector& psi) {
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
        const double mag = std::abs(psi.amplitudes[i]);
        if (mag > best + 1e-15) {  // strict improvement keeps the lowest index on ties
            best = mag;
            imax = i;
        }
    }
    std::vector<cplx> amps = psi.amplitudes;
    if (best > 0.0) {
        const cplx phase = std::conj(psi.amplitudes[imax]) / best;
        kernels::scale(phase, amps.data(), amps.size());
    }
    return {psi.structure, std::move(amps)};
}

void validate_state(const StateVector& psi, double norm_tol) {
    if (psi.amplitudes.size() != psi.structure.total_dim())
        throw Error(ErrorKind::invalid_argument, "amplitude count does not match structure");
    if (std::abs(psi.norm() - 1.0) > norm_tol)
        throw Error(ErrorKind::invalid_argument, "state vector is not normalized");
}

void validate_density(const DensityOperator& rho, double herm_tol, double norm_tol,
                      double psd_tol) {
    if (!rho.matrix.is_square() || rho.matrix.rows() != rho.structure.total_dim())
        throw Error(ErrorKind::invalid_argument, "density matrix size does not match structure");
    if (hermiticity_deviation(rho.matrix) > herm_tol)
        throw Error(ErrorKind::invalid_argument, "density matrix is not Hermitian");
    if (std::abs(rho.matrix.trace() - 1.0) > norm_tol)
        throw Error(ErrorKind::invalid_argument, "density matrix trace is not 1");
    for (double ev : hermitian_eigenvalues(rho.matrix)) {
        if (ev < -psd_tol)
            throw Error(ErrorKind::invalid_argument, "density matrix has a negative eigenvalue");
    }
}

void validate_event(const SubsystemEvent& event, const HilbertStructure& structure,
                    double herm_tol, double idem_tol) {
    if (event.subsystem >= structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "event subsystem index out of range");
    const std::size_t d = structure.dim(event.subsystem);
    if (!event.projector.is_square() || event.projector.rows() != d)
        throw Error(ErrorKind::structure_mismatch,
                    "projector dimension does not match its subsystem");
    validate_projector(event.projector, herm_tol, idem_tol);
}

void validate_projector(const CMatrix& q, double herm_tol, double idem_tol) {
    if (!q.is_square())
        throw Error(ErrorKind::invalid_argument, "projector must be square");
    if (hermiticity_deviation(q) > herm_tol)
        throw Error(ErrorKind::invalid_argument, "event projector is not Hermitian");
    if (max_abs_diff(q * q, q) > idem_tol)
        throw Error(ErrorKind::invalid_argument, "event projector is not idempotent");
}

}  // namespace qstate
