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

#include <vector>

#include "ctwb/linalg.hpp"

namespace ctwb {

// A validated density operator: Hermitian and unit-trace within 1e-12,
// positive semidefinite with eigenvalue floor -1e-10.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(CMat m);
  static DensityMatrix pure(const CVec& psi);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMat& matrix() const { return m_; }

  double purity() const;                       // tr(rho^2)
  double expectation(const CMat& op) const;    // tr(rho op), real part

 private:
  explicit DensityMatrix(CMat m) : m_(std::move(m)) {}
  CMat m_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// 1/2 * trace norm of the difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// Marginal on the listed factors; `dims` in most-significant-first order.
DensityMatrix marginal(const DensityMatrix& rho, const std::vector<int>& dims,
                       const std::vector<int>& keep);

}  // namespace ctwb
