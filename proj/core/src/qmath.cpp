// Copyright 2026 The causal-switch-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cst/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cst/error.hpp"

namespace cst {
namespace {

std::string shape(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shapes " + shape(a) + " and " + shape(b) + " differ");
  }
}

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix " + shape(a) + " is not square");
}

void require_ket(const CMatrix& a, const char* op) {
  if (a.cols() != 1) throw DimensionError(std::string(op) + ": " + shape(a) + " is not a column vector");
}

void require_system_control(const CMatrix& big, const char* op) {
  if (big.rows() != 4 || big.cols() != 4) {
    throw DimensionError(std::string(op) + ": expected a 4x4 system(x)control operator, got " + shape(big));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : CMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("CMatrix: dimensions must be positive");
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("CMatrix: " + std::to_string(entries_.size()) + " entries for shape " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()), cols_(0) {
  if (rows_ == 0) throw DimensionError("CMatrix: empty initializer");
  cols_ = rows.begin()->size();
  if (cols_ == 0) throw DimensionError("CMatrix: empty row");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("CMatrix: ragged initializer rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1.0;
  return out;
}

CMatrix CMatrix::ket(std::initializer_list<Complex> amplitudes) {
  return CMatrix(amplitudes.size(), 1, std::vector<Complex>(amplitudes));
}

CMatrix CMatrix::ket(std::span<const Complex> amplitudes) {
  return CMatrix(amplitudes.size(), 1, std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

CMatrix CMatrix::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("CMatrix::basis: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return CMatrix(dim, 1, std::move(v));
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator+");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  auto rhs = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
  return CMatrix(a.rows(), a.cols(), std::move(out));
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator-");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  auto rhs = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs[i];
  return CMatrix(a.rows(), a.cols(), std::move(out));
}

CMatrix operator*(Complex scale, const CMatrix& a) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (auto& z : out) z *= scale;
  return CMatrix(a.rows(), a.cols(), std::move(out));
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions of " + shape(a) + " and " + shape(b) + " differ");
  }
  std::vector<Complex> out(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out[r * b.cols() + c] += lhs * b(k, c);
    }
  }
  return CMatrix(a.rows(), b.cols(), std::move(out));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> out(rows * cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex scale = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = scale * b(br, bc);
        }
      }
    }
  }
  return CMatrix(rows, cols, std::move(out));
}

CMatrix dagger(const CMatrix& a) {
  std::vector<Complex> out(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[c * a.rows() + r] = std::conj(a(r, c));
  }
  return CMatrix(a.cols(), a.rows(), std::move(out));
}

Complex trace(const CMatrix& a) {
  require_square(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

CMatrix outer(const CMatrix& a, const CMatrix& b) {
  require_ket(a, "outer");
  require_ket(b, "outer");
  return matmul(a, dagger(b));
}

Complex inner(const CMatrix& a, const CMatrix& b) {
  require_ket(a, "inner");
  require_ket(b, "inner");
  if (a.rows() != b.rows()) throw DimensionError("inner: kets " + shape(a) + " and " + shape(b) + " differ");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += std::conj(a(i, 0)) * b(i, 0);
  return sum;
}

double norm(const CMatrix& ket) { return std::sqrt(std::real(inner(ket, ket))); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto lhs = a.entries();
  auto rhs = b.entries();
  for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  return worst;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const CMatrix& a, double tol) { return a.is_square() && approx_equal(a, dagger(a), tol); }

double min_eigenvalue_2x2(const CMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("min_eigenvalue_2x2: expected 2x2, got " + shape(a));
  const double d0 = std::real(a(0, 0));
  const double d1 = std::real(a(1, 1));
  const double off = std::abs(a(0, 1));
  const double half_gap = std::hypot(0.5 * (d0 - d1), off);
  return 0.5 * (d0 + d1) - half_gap;
}

bool is_positive_semidefinite_2x2(const CMatrix& a, double tol) {
  return is_hermitian(a, tol) && min_eigenvalue_2x2(a) >= -tol;
}

CMatrix inner_project_control(const CMatrix& big, const CMatrix& m) {
  require_system_control(big, "inner_project_control");
  if (m.rows() != 2 || m.cols() != 1) throw DimensionError("inner_project_control: control ket must be 2x1");
  if (std::abs(norm(m) - 1.0) > 1e-12) throw InvalidArgument("inner_project_control: control ket is not unit");
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      Complex sum{};
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) sum += std::conj(m(k, 0)) * big(2 * r + k, 2 * c + l) * m(l, 0);
      }
      out[r * 2 + c] = sum;
    }
  }
  return CMatrix(2, 2, std::move(out));
}

CMatrix partial_trace_control(const CMatrix& big) {
  require_system_control(big, "partial_trace_control");
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) out[r * 2 + c] = big(2 * r, 2 * c) + big(2 * r + 1, 2 * c + 1);
  }
  return CMatrix(2, 2, std::move(out));
}

CMatrix partial_trace_system(const CMatrix& big) {
  require_system_control(big, "partial_trace_system");
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) out[r * 2 + c] = big(r, c) + big(2 + r, 2 + c);
  }
  return CMatrix(2, 2, std::move(out));
}

}  // namespace cst
