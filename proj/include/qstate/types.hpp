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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstate {

using cplx = std::complex<double>;

// Validation and comparison tolerances (absolute, element-wise).
namespace tol {
inline constexpr double norm = 1e-10;  // state normalization / unit trace
inline constexpr double herm = 1e-10;  // Hermiticity
inline constexpr double idem = 1e-10;  // projector idempotency
inline constexpr double unit = 1e-10;  // unitarity
inline constexpr double psd = 1e-10;   // eigenvalue floor for density operators
inline constexpr double cmp = 1e-9;    // equivalence-check comparisons
inline constexpr double prob = 1e-12;  // zero-probability threshold
}  // namespace tol

enum class ErrorKind {
    structure_mismatch,
    degenerate_trace,
    non_unitary,
    zero_probability_event,
    subject_object_overlap,
    not_a_partition,
    degenerate_slit,
    invalid_argument,
    parse_error,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* kind_name() const noexcept { return error_kind_name(kind_); }

  private:
    ErrorKind kind_;
};

// An ordered tensor product of finite-dimensional subsystems. Subsystem 0 is
// the most significant factor: flat = sum_k i_k * prod_{j>k} dims[j].
class HilbertStructure {
  public:
    explicit HilbertStructure(std::vector<std::size_t> dims);

    std::size_t num_subsystems() const { return dims_.size(); }
    std::size_t dim(std::size_t k) const { return dims_[k]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_dim_; }

    // prod_{j>k} dims[j]: the flat-index weight of subsystem k.
    std::size_t stride(std::size_t k) const;

    std::size_t flatten(std::span<const std::size_t> multi) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    // Structure of the listed subsystems, in their original relative order.
    HilbertStructure subset(std::span<const std::size_t> keep) const;
    static HilbertStructure concat(const HilbertStructure& a, const HilbertStructure& b);

    bool operator==(const HilbertStructure& other) const { return dims_ == other.dims_; }

  private:
    std::vector<std::size_t> dims_;
    std::size_t total_dim_;
};

// Dense row-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    cplx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    CMatrix adjoint() const;
    cplx trace() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx alpha);

    // y = M x
    std::vector<cplx> apply(std::span<const cplx> x) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx alpha, CMatrix m);

// a b^dagger: (i, j) -> a_i conj(b_j)
CMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
// max_ij |M - M^dagger| / 2-ish gauge of Hermiticity; exact: max |m_ij - conj(m_ji)|
double hermiticity_deviation(const CMatrix& m);

// Amplitude vector with no normalization requirement. Intermediates (partial
// scalar products, projected components) live here; probability-bearing
// operations accept only StateVector.
struct RawVector {
    HilbertStructure structure;
    std::vector<cplx> amplitudes;

    double norm() const;
};

// Unit-norm amplitude vector over a HilbertStructure. Construction does not
// validate; call validate_state explicitly (oracles build intermediates).
struct StateVector {
    HilbertStructure structure;
    std::vector<cplx> amplitudes;

    RawVector raw() const { return {structure, amplitudes}; }
    double norm() const;
};

// Hermitian positive unit-trace operator (possibly an improper mixture).
struct DensityOperator {
    HilbertStructure structure;
    CMatrix matrix;
};

// The subject entity: a subsystem choice plus a projector (event) on it.
// Subsystem indices are 0-based here; CLI and report text use 1-based.
struct SubsystemEvent {
    std::size_t subsystem;
    CMatrix projector;
};

// |psi><psi| as a DensityOperator over the same structure.
DensityOperator pure_density(const StateVector& psi);

// Divides by the norm; throws zero-probability-event if the norm is below
// sqrt(tol::prob).
StateVector normalized(const RawVector& v);

// Rotates the global phase so the largest-magnitude amplitude (lowest index
// on ties) is real positive. States are physically defined up to phase; this
// picks the canonical representative used for comparisons.
StateVector canonical_phase(const StateVector& psi);

// Explicit validation entry points; throw Error(invalid-argument) with a
// description of the violated invariant.
void validate_state(const StateVector& psi, double norm_tol = tol::norm);
void validate_density(const DensityOperator& rho, double herm_tol = tol::herm,
                      double norm_tol = tol::norm, double psd_tol = tol::psd);
void validate_event(const SubsystemEvent& event, const HilbertStructure& structure,
                    double herm_tol = tol::herm, double idem_tol = tol::idem);
void validate_projector(const CMatrix& q, double herm_tol = tol::herm,
                        double idem_tol = tol::idem);

}  // namespace qstate
