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

#ifndef CST_QMATH_HPP
#define CST_QMATH_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cst {

using Complex = std::complex<double>;

/// Absolute tolerance used by comparisons unless a caller passes its own.
inline constexpr double kDefaultTolerance = 1e-10;

/// Dense row-major complex matrix. Kets are stored as column matrices.
///
/// Tensor ordering is fixed for the whole library: in a 4x4 operator the
/// system qubit is the first (most significant) factor and the control qubit
/// the second, so basis index = 2 * system + control.
class CMatrix {
 public:
  /// Zero matrix of the given shape.
  CMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; entries.size() must equal rows * cols.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Nested initializer, one list per row. Ragged rows are rejected.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  /// Column vector built from amplitudes.
  static CMatrix ket(std::initializer_list<Complex> amplitudes);
  static CMatrix ket(std::span<const Complex> amplitudes);
  /// Column vector with a single one at `index`.
  static CMatrix basis(std::size_t dim, std::size_t index);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, const CMatrix& a);

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
Complex trace(const CMatrix& a);

/// |a><b| for column vectors a, b.
CMatrix outer(const CMatrix& a, const CMatrix& b);
/// <a|b> for column vectors a, b.
Complex inner(const CMatrix& a, const CMatrix& b);
double norm(const CMatrix& ket);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kDefaultTolerance);

bool is_hermitian(const CMatrix& a, double tol = kDefaultTolerance);
/// Smallest eigenvalue of a 2x2 Hermitian matrix (closed form).
double min_eigenvalue_2x2(const CMatrix& a);
/// Hermitian 2x2 with eigenvalues >= -tol.
bool is_positive_semidefinite_2x2(const CMatrix& a, double tol = kDefaultTolerance);

/// (I (x) <m|) big (I (x) |m>) for a 4x4 system(x)control operator and a unit control ket.
/// Throws InvalidArgument when |m| deviates from 1 by more than 1e-12.
CMatrix inner_project_control(const CMatrix& big, const CMatrix& m);

/// Trace over the control factor of a 4x4 system(x)control operator.
CMatrix partial_trace_control(const CMatrix& big);
/// Trace over the system factor of a 4x4 system(x)control operator.
CMatrix partial_trace_system(const CMatrix& big);

}  // namespace cst

#endif  // CST_QMATH_HPP
