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

#include "ctwb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctwb {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_real_operator(const CMat& m, double tol) {
  return m.imag().cwiseAbs().maxCoeff() <= tol;
}

double operator_norm(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

bool is_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return approx_equal(m, m.adjoint(), tol);
}

bool is_unitary(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  CMat id = CMat::Identity(m.rows(), m.cols());
  return approx_equal(m.adjoint() * m, id, std::max(tol, 1e-10));
}

bool is_projector(const CMat& m, double tol) {
  return is_hermitian(m, tol) && approx_equal(m * m, m, std::max(tol, 1e-10));
}

int psd_rank(const CMat& m, double tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  int rank = 0;
  double thresh = std::max(tol, 1e-9);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > thresh) ++rank;
  }
  return rank;
}

CVec ket(std::initializer_list<cplx> amps) {
  CVec v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const auto& a : amps) v(i++) = a;
  return v;
}

CMat projector(const CVec& v) {
  double n = v.norm();
  if (n < 1e-15) throw std::invalid_argument("projector: zero vector");
  CVec u = v / n;
  return u * u.adjoint();
}

CMat span_projector(const std::vector<CMat>& projs) {
  if (projs.empty()) throw std::invalid_argument("span_projector: empty list");
  Eigen::Index d = projs.front().rows();
  CMat sum = CMat::Zero(d, d);
  for (const auto& p : projs) {
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("span_projector: dimension mismatch");
    }
    sum += p;
  }
  // Eigenvectors of the (PSD) sum with nonzero eigenvalue span the union of
  // the ranges; rebuild an exact projector from them.
  Eigen::SelfAdjointEigenSolver<CMat> es(sum);
  CMat out = CMat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) > 1e-9) {
      CVec v = es.eigenvectors().col(i);
      out += v * v.adjoint();
    }
  }
  return out;
}

CMat partial_trace(const CMat& rho, const std::vector<int>& dims,
                   const std::vector<int>& keep) {
  int total = 1;
  for (int d : dims) total *= d;
  if (rho.rows() != total || rho.cols() != total) {
    throw std::invalid_argument("partial_trace: dims do not match matrix");
  }
  int kept_dim = 1;
  for (int k : keep) kept_dim *= dims.at(static_cast<std::size_t>(k));

  const int n = static_cast<int>(dims.size());
  std::vector<int> strides(n);
  int acc = 1;
  for (int f = n - 1; f >= 0; --f) {
    strides[static_cast<std::size_t>(f)] = acc;
    acc *= dims[static_cast<std::size_t>(f)];
  }
  std::vector<bool> is_kept(n, false);
  for (int k : keep) is_kept[static_cast<std::size_t>(k)] = true;

  auto decompose = [&](int idx, std::vector<int>& out) {
    for (int f = 0; f < n; ++f) {
      out[static_cast<std::size_t>(f)] =
          (idx / strides[static_cast<std::size_t>(f)]) %
          dims[static_cast<std::size_t>(f)];
    }
  };
  auto kept_index = [&](const std::vector<int>& factors) {
    int idx = 0;
    for (int k : keep) {
      idx = idx * dims[static_cast<std::size_t>(k)] +
            factors[static_cast<std::size_t>(k)];
    }
    return idx;
  };

  CMat out = CMat::Zero(kept_dim, kept_dim);
  std::vector<int> fr(n), fc(n);
  for (int r = 0; r < total; ++r) {
    decompose(r, fr);
    for (int c = 0; c < total; ++c) {
      decompose(c, fc);
      bool diagonal_on_traced = true;
      for (int f = 0; f < n; ++f) {
        if (!is_kept[static_cast<std::size_t>(f)] &&
            fr[static_cast<std::size_t>(f)] != fc[static_cast<std::size_t>(f)]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (diagonal_on_traced) out(kept_index(fr), kept_index(fc)) += rho(r, c);
    }
  }
  return out;
}

CMat embed_qubit_op(const CMat& u, const std::vector<int>& targets,
                    int n_subsystems) {
  const int k = static_cast<int>(targets.size());
  if (u.rows() != (1 << k) || u.cols() != (1 << k)) {
    throw std::invalid_argument("embed_qubit_op: operator dim mismatch");
  }
  const int total = 1 << n_subsystems;
  auto sub_bits = [&](int idx) {
    int v = 0;
    for (int t : targets) {
      v = (v << 1) | ((idx >> (n_subsystems - 1 - t)) & 1);
    }
    return v;
  };
  auto rest_bits = [&](int idx) {
    int v = 0;
    for (int f = 0; f < n_subsystems; ++f) {
      if (std::find(targets.begin(), targets.end(), f) == targets.end()) {
        v = (v << 1) | ((idx >> (n_subsystems - 1 - f)) & 1);
      }
    }
    return v;
  };
  CMat out = CMat::Zero(total, total);
  for (int r = 0; r < total; ++r) {
    for (int c = 0; c < total; ++c) {
      if (rest_bits(r) == rest_bits(c)) out(r, c) = u(sub_bits(r), sub_bits(c));
    }
  }
  return out;
}

}  // namespace ctwb
