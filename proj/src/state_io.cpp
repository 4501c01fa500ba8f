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

#include "qstate/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace qstate {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::parse_error,
                "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &pos);
    } catch (const std::exception&) {
        parse_fail(line_no, "expected an index, got '" + token + "'");
    }
    if (pos != token.size())
        parse_fail(line_no, "trailing characters in index '" + token + "'");
    return static_cast<std::size_t>(v);
}

double parse_number(const std::string& token, std::size_t line_no) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        parse_fail(line_no, "expected a number, got '" + token + "'");
    }
    if (pos != token.size())
        parse_fail(line_no, "trailing characters in number '" + token + "'");
    return v;
}

}  // namespace

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

StateFile read_state_file(std::istream& in) {
    std::optional<HilbertStructure> structure;
    std::optional<StateFileKind> kind;
    std::vector<cplx> amplitudes;
    CMatrix matrix;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword))
            continue;  // blank line

        if (keyword == "dims") {
            if (structure)
                parse_fail(line_no, "duplicate dims line");
            std::vector<std::size_t> dims;
            std::string token;
            while (fields >> token)
                dims.push_back(parse_index(token, line_no));
            try {
                structure.emplace(std::move(dims));
            } catch (const Error& e) {
                parse_fail(line_no, e.what());
            }
            continue;
        }
        if (!structure)
            parse_fail(line_no, "the dims line must come first");

        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token)
            tokens.push_back(token);

        if (keyword == "amp") {
            if (kind == StateFileKind::density)
                parse_fail(line_no, "amp record in a density file");
            if (!kind) {
                kind = StateFileKind::vector;
                amplitudes.assign(structure->total_dim(), cplx{});
            }
            if (tokens.size() != 3)
                parse_fail(line_no, "amp records take <flat-index> <re> <im>");
            const std::size_t idx = parse_index(tokens[0], line_no);
            if (idx >= structure->total_dim())
                parse_fail(line_no, "amplitude index out of range");
            amplitudes[idx] = {parse_number(tokens[1], line_no),
                               parse_number(tokens[2], line_no)};
        } else if (keyword == "rho") {
            if (kind == StateFileKind::vector)
                parse_fail(line_no, "rho record in a state-vector file");
            if (!kind) {
                kind = StateFileKind::density;
                matrix = CMatrix(structure->total_dim(), structure->total_dim());
            }
            if (tokens.size() != 4)
                parse_fail(line_no, "rho records take <row> <col> <re> <im>");
            const std::size_t row = parse_index(tokens[0], line_no);
            const std::size_t col = parse_index(tokens[1], line_no);
            if (row >= structure->total_dim() || col >= structure->total_dim())
                parse_fail(line_no, "matrix index out of range");
            matrix(row, col) = {parse_number(tokens[2], line_no),
                                parse_number(tokens[3], line_no)};
        } else {
            parse_fail(line_no, "unknown record '" + keyword + "'");
        }
    }

    if (!structure)
        throw Error(ErrorKind::parse_error, "missing dims line");
    if (!kind)
        throw Error(ErrorKind::parse_error, "no amp or rho records");
    return {std::move(*structure), *kind, std::move(amplitudes), std::move(matrix)};
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
    return read_state_file(in);
}

void write_state_vector(std::ostream& out, const HilbertStructure& structure,
                        std::span<const cplx> amplitudes) {
    out << "dims";
    for (std::size_t d : structure.dims())
        out << ' ' << d;
    out << '\n';
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        if (amplitudes[i] != cplx{})
            out << "amp " << i << ' ' << format_g17(amplitudes[i].real()) << ' '
                << format_g17(amplitudes[i].imag()) << '\n';
}

void write_density(std::ostream& out, const DensityOperator& rho) {
    out << "dims";
    for (std::size_t d : rho.structure.dims())
        out << ' ' << d;
    out << '\n';
    for (std::size_t i = 0; i < rho.matrix.rows(); ++i)
        for (std::size_t j = 0; j < rho.matrix.cols(); ++j)
            if (rho.matrix(i, j) != cplx{})
                out << "rho " << i << ' ' << j << ' ' << format_g17(rho.matrix(i, j).real())
                    << ' ' << format_g17(rho.matrix(i, j).imag()) << '\n';
}

CMatrix read_projector_file(const std::string& path, std::size_t expected_dim) {
    const StateFile file = read_state_file(path);
    if (file.kind != StateFileKind::density)
        throw Error(ErrorKind::parse_error,
                    "projector file '" + path + "' must use rho records");
    if (file.structure.num_subsystems() != 1 || file.structure.total_dim() != expected_dim)
        throw Error(ErrorKind::parse_error, "projector in '" + path + "' has dimension " +
                                                std::to_string(file.structure.total_dim()) +
                                                ", expected " + std::to_string(expected_dim));
    validate_projector(file.matrix);
    return file.matrix;
}

}  // namespace qstate
