// Copyright 2026 The ctwb Authors
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
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace ctwb {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Absolute tolerance for matrix/scalar equality checks. All dimensions in
// this library are <= 16, so double precision leaves ample headroom.
inline constexpr double kEqTol = 1e-12;
// Eigenvalue floor accepted when checking positive semidefiniteness.
inline constexpr double kPsdFloor = -1e-10;
// Largest Hilbert-space dimension the quantum backend will build.
inline constexpr int kMaxDim = 16;

// Kronecker product; index convention puts the first factor in the most
// significant position (kron(A,B) row index = i_A * rows(B) + i_B).
CMat kron(const CMat& a, const CMat& b);

bool approx_equal(const CMat& a, const CMat& b, double tol = kEqTol);

// True iff every entry has |imaginary part| <= tol in the basis the matrix
// is written in. Real-representability is basis-relative by nature; callers
// fix the computational basis per subsystem.
bool is_real_operator(const CMat& m, double tol = kEqTol);

// Largest singular value.
double operator_norm(const CMat& m);

bool is_hermitian(const CMat& m, double tol = kEqTol);
bool is_unitary(const CMat& m, double tol = kEqTol);
bool is_projector(const CMat& m, double tol = kEqTol);

// Rank of a Hermitian PSD matrix by eigenvalue count above sqrt(tol).
int psd_rank(const CMat& m, double tol = kEqTol);

CVec ket(std::initializer_list<cplx> amps);
CMat projector(const CVec& v);

// Projector onto the joint span of the ranges of the given projectors.
CMat span_projector(const std::vector<CMat>& projs);

// Partial trace over the factors NOT listed in `keep`. `dims` gives the
// dimension of each tensor factor in most-significant-first order, matching
// kron(). `keep` must be strictly increasing.
CMat partial_trace(const CMat& rho, const std::vector<int>& dims,
                   const std::vector<int>& keep);

// Embed a unitary acting on the listed 2-dimensional subsystems into the
// full 2^n space. `targets` lists subsystem positions (0 = most significant)
// in the order the operator's own factors are laid out.
CMat embed_qubit_op(const CMat& u, const std::vector<int>& targets,
                    int n_subsystems);

}  // namespace ctwb
