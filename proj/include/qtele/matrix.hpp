// Copyright 2026 The qtele Authors
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
#include <initializer_list>
#include <span>
#include <vector>

namespace qtele {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense row-major complex matrix. Small dimensions only (states and
/// operators on a handful of qubits), so everything is stored by value.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::span<const Complex> values);
  /// |v><v|
  static Matrix projector(std::span<const Complex> v);
  /// |u><v|
  static Matrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// Largest entrywise |a_ij - conj(a_ji)|.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return is_square() && hermiticity_error() <= tol; }
  /// (A + A^dagger) / 2
  Matrix hermitian_part() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(std::span<const Complex> a, std::span<const Complex> b);
Vector matvec(const Matrix& m, std::span<const Complex> v);
/// U A U^dagger
Matrix conjugate(const Matrix& u, const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Largest entrywise modulus of a - b; dimensions must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

namespace pauli {
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

}  // namespace qtele
