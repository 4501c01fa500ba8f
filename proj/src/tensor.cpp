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

#include "qstate/tensor.hpp"

#include <algorithm>

#include "qstate/kernels.hpp"

namespace qstate {

namespace {

std::vector<std::size_t> complement(const HilbertStructure& structure,
                                    std::span<const std::size_t> subset) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < structure.num_subsystems(); ++k)
        if (std::find(subset.begin(), subset.end(), k) == subset.end())
            out.push_back(k);
    return out;
}

std::vector<std::size_t> sorted_unique(std::span<const std::size_t> keep) {
    std::vector<std::size_t> out(keep.begin(), keep.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_vector_matches(const RawVector& v) {
    if (v.amplitudes.size() != v.structure.total_dim())
        throw Error(ErrorKind::invalid_argument, "amplitude count does not match structure");
}

}  // namespace

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    const std::size_t db = b.amplitudes.size();
    std::vector<cplx> out(a.amplitudes.size() * db);
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        kernels::axpy(a.amplitudes[i], b.amplitudes.data(), out.data() + i * db, db);
    return {HilbertStructure::concat(a.structure, b.structure), std::move(out)};
}

StateVector basis_state(const HilbertStructure& structure, std::size_t flat) {
    if (flat >= structure.total_dim())
        throw Error(ErrorKind::invalid_argument, "basis index out of range");
    std::vector<cplx> amps(structure.total_dim());
    amps[flat] = 1.0;
    return {structure, std::move(amps)};
}

std::vector<std::size_t> subset_offsets(const HilbertStructure& structure,
                                        std::span<const std::size_t> subsystems) {
    std::vector<std::size_t> offs{0};
    for (std::size_t k : subsystems) {
        if (k >= structure.num_subsystems())
            throw Error(ErrorKind::invalid_argument, "subsystem index out of range");
        const std::size_t stride = structure.stride(k);
        const std::size_t d = structure.dim(k);
        std::vector<std::size_t> next;
        next.reserve(offs.size() * d);
        for (std::size_t base : offs)
            for (std::size_t digit = 0; digit < d; ++digit)
                next.push_back(base + digit * stride);
        offs = std::move(next);
    }
    return offs;
}

CMatrix partial_trace_matrix(const CMatrix& m, const HilbertStructure& structure,
                             std::span<const std::size_t> keep) {
    if (!m.is_square() || m.rows() != structure.total_dim())
        throw Error(ErrorKind::structure_mismatch, "matrix size does not match structure");
    const std::vector<std::size_t> kept = sorted_unique(keep);
    if (kept.empty() || kept.size() == structure.num_subsystems())
        throw Error(ErrorKind::degenerate_trace,
                    "partial trace needs a non-empty proper subset of subsystems");
    const std::vector<std::size_t> traced = complement(structure, kept);

    const std::vector<std::size_t> offs_keep = subset_offsets(structure, kept);
    const std::vector<std::size_t> offs_tr = subset_offsets(structure, traced);

    CMatrix out(offs_keep.size(), offs_keep.size());
    for (std::size_t a = 0; a < offs_keep.size(); ++a)
        for (std::size_t b = 0; b < offs_keep.size(); ++b) {
            cplx sum = 0.0;
            for (std::size_t t : offs_tr)
                sum += m(offs_keep[a] + t, offs_keep[b] + t);
            out(a, b) = sum;
        }
    return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep) {
    CMatrix reduced = partial_trace_matrix(rho.matrix, rho.structure, keep);
    return {rho.structure.subset(sorted_unique(keep)), std::move(reduced)};
}

RawVector partial_scalar_product(const RawVector& phi, const RawVector& psi,
                                 std::size_t subsystem) {
    check_vector_matches(phi);
    check_vector_matches(psi);
    if (psi.structure.num_subsystems() < 2)
        throw Error(ErrorKind::structure_mismatch,
                    "contraction needs a composite of at least two subsystems");
    if (subsystem >= psi.structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "contraction subsystem index out of range");
    if (phi.structure.num_subsystems() != 1 ||
        phi.structure.dim(0) != psi.structure.dim(subsystem))
        throw Error(ErrorKind::structure_mismatch,
                    "bra factor does not match the contracted subsystem");

    const std::vector<std::size_t> rest = complement(psi.structure, std::array{subsystem});
    const std::vector<std::size_t> offs_rest = subset_offsets(psi.structure, rest);
    const std::size_t stride = psi.structure.stride(subsystem);
    const std::size_t d = phi.structure.dim(0);

    std::vector<cplx> out(offs_rest.size());
    for (std::size_t k = 0; k < offs_rest.size(); ++k) {
        if (stride == 1) {  // contracted factor is contiguous
            out[k] = kernels::dot_conj(phi.amplitudes.data(),
                                       psi.amplitudes.data() + offs_rest[k], d);
        } else {
            cplx sum = 0.0;
            for (std::size_t l = 0; l < d; ++l)
                sum += std::conj(phi.amplitudes[l]) * psi.amplitudes[offs_rest[k] + l * stride];
            out[k] = sum;
        }
    }
    return {psi.structure.subset(rest), std::move(out)};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t r = 0; r < b.rows(); ++r) {
            cplx* dest = out.row(i * b.rows() + r);
            for (std::size_t j = 0; j < a.cols(); ++j)
                kernels::axpy(a(i, j), b.row(r), dest + j * b.cols(), b.cols());
        }
    return out;
}

CMatrix embed(const SubsystemEvent& event, const HilbertStructure& structure) {
    if (event.subsystem >= structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "event subsystem index out of range");
    const std::size_t d = structure.dim(event.subsystem);
    if (!event.projector.is_square() || event.projector.rows() != d)
        throw Error(ErrorKind::structure_mismatch,
                    "projector dimension does not match its subsystem");

    const std::vector<std::size_t> others = complement(structure, std::array{event.subsystem});
    const std::vector<std::size_t> offs = subset_offsets(structure, others);
    const std::size_t stride = structure.stride(event.subsystem);

    CMatrix out(structure.total_dim(), structure.total_dim());
    for (std::size_t base : offs)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                out(base + p * stride, base + q * stride) = event.projector(p, q);
    return out;
}

StateVector apply_subsystem_unitary(const StateVector& state, const CMatrix& u,
                                    std::size_t subsystem, double unit_tol) {
    check_vector_matches(state.raw());
    if (subsystem >= state.structure.num_subsystems())
        throw Error(ErrorKind::structure_mismatch, "subsystem index out of range");
    const std::size_t d = state.structure.dim(subsystem);
    if (!u.is_square() || u.rows() != d)
        throw Error(ErrorKind::structure_mismatch, "unitary dimension does not match subsystem");
    if (max_abs_diff(u.adjoint() * u, CMatrix::identity(d)) > unit_tol)
        throw Error(ErrorKind::non_unitary, "matrix fails the unitarity tolerance");

    const std::vector<std::size_t> others = complement(state.structure, std::array{subsystem});
    const std::vector<std::size_t> offs = subset_offsets(state.structure, others);
    const std::size_t stride = state.structure.stride(subsystem);

    std::vector<cplx> out(state.amplitudes.size());
    std::vector<cplx> slice(d);
    for (std::size_t base : offs) {
        for (std::size_t l = 0; l < d; ++l)
            slice[l] = state.amplitudes[base + l * stride];
        for (std::size_t i = 0; i < d; ++i)
            out[base + i * stride] = kernels::dot(u.row(i), slice.data(), d);
    }
    return {state.structure, std::move(out)};
}

}  // namespace qstate
