#pragma once

#include "tct/operators.hpp"

#include <vector>

namespace tct {

// Complete Hermitian operator basis {B_0, B_i}, trace-orthonormal:
// Tr(B_a B_b) = c * delta_ab with B_0 = I/sqrt(D). Index 0 is always the
// scaled identity; indices 1..D^2-1 are traceless.
class OperatorBasis {
public:
  OperatorBasis(std::vector<Operator> elements, double normalization);

  int dim() const { return elements_[0].dim(); }
  int size() const { return static_cast<int>(elements_.size()); }
  // number of traceless elements, D^2 - 1
  int traceless_count() const { return size() - 1; }
  const Operator& element(int a) const { return elements_[static_cast<std::size_t>(a)]; }
  // spatial index i in [0, D^2-2] maps to element i+1
  const Operator& traceless(int i) const { return elements_[static_cast<std::size_t>(i) + 1]; }
  double normalization() const { return normalization_; }

  bool equal_norm(double tolerance = 1e-12) const;
  // largest operator norm among the traceless elements; equals the common
  // norm for equal-norm bases (Pauli)
  double norm_bound() const;

private:
  std::vector<Operator> elements_;
  double normalization_;
};

// {I, sigma_x, sigma_y, sigma_z} / sqrt(2); normalization c = 1.
OperatorBasis pauli_basis();

// Generalized Gell-Mann basis for D >= 2 (orthonormal, B_0 = I/sqrt(D)).
// For D = 2 this is the Pauli basis. Element norms are not equal for D > 2.
OperatorBasis gell_mann_basis(int dim);

// f_abc and g_abc with [B_a,B_b] = i f_abc B_c and {B_a,B_b} = g_abc B_c.
// f is antisymmetric and g symmetric in (a,b).
class StructureTensors {
public:
  StructureTensors(int size, std::vector<double> f, std::vector<double> g);

  int size() const { return n_; }
  double f(int a, int b, int c) const { return f_[idx(a, b, c)]; }
  double g(int a, int b, int c) const { return g_[idx(a, b, c)]; }

private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_;
  std::vector<double> f_, g_;
};

// f_abc = -(i/c) Tr([B_a,B_b] B_c), g_abc = (1/c) Tr({B_a,B_b} B_c).
StructureTensors structure_tensors(const OperatorBasis& basis);

} // namespace tct
