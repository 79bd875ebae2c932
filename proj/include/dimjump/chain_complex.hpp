#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dimjump/f2_linalg.hpp"
#include "dimjump/group_algebra.hpp"

namespace dimjump {

struct ValidationReport {
  bool ok = true;
  std::size_t degree = 0;  // first i with boundary(i-1)*boundary(i) != 0
  std::size_t row = 0, col = 0;
  std::string to_string() const;
};

/// Tensor-product bookkeeping: which (i, j) input degrees feed each output
/// sector, in the fixed order of descending first-factor degree.
struct ProductSector {
  std::size_t deg_a, deg_b;
  std::size_t dim;     // R-module dimension of the sector
  std::size_t offset;  // cell offset inside the output module
};

/// D-chain complex over R: modules R^{m_0} .. R^{m_D} with boundary maps
/// boundary(i): module(i) -> module(i-1) satisfying consecutive products = 0.
class ChainComplexR {
 public:
  ChainComplexR(FiniteAbelianGroup group, std::vector<std::size_t> module_dims,
                std::vector<RMatrix> boundaries);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t length() const { return dims_.size() - 1; }
  std::size_t module_dim(std::size_t degree) const { return dims_.at(degree); }
  const RMatrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }  // 1-based

  ValidationReport validate() const;

  const std::vector<std::vector<ProductSector>>& sectors() const { return sectors_; }
  void set_sectors(std::vector<std::vector<ProductSector>> s) { sectors_ = std::move(s); }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::size_t> dims_;
  std::vector<RMatrix> boundaries_;
  // present on complexes built by tensor_product; one list per degree
  std::vector<std::vector<ProductSector>> sectors_;
};

/// Total complex of the product; degree-n module is the direct sum of
/// A_i (x) B_j over i + j = n with descending i, and the boundary acts as
/// dA (x) I + I (x) dB. Cells of A_i (x) B_j are flattened row-major
/// (A index slow).
ChainComplexR tensor_product(const ChainComplexR& a, const ChainComplexR& b);

class ChainComplexF2 {
 public:
  ChainComplexF2(std::vector<std::size_t> space_dims, std::vector<BitMatrix> boundaries);

  std::size_t length() const { return dims_.size() - 1; }
  std::size_t space_dim(std::size_t degree) const { return dims_.at(degree); }
  const BitMatrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }

  ValidationReport validate() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<BitMatrix> boundaries_;
};

/// Replaces every boundary map by its binary representation.
ChainComplexF2 binary_lift(const ChainComplexR& c);

/// Homology at one degree: representatives of ker d_i / im d_{i+1} plus
/// membership tests for the cycle and boundary spaces.
struct HomologyData {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::vector<BitVector> representatives;
  BitMatrix cycle_matrix;   // d_i (zero map outside range)
  RowSpace boundary_space;  // row space spanned by columns of d_{i+1}

  bool is_cycle(const BitVector& v) const { return cycle_matrix.mul_vec(v).is_zero(); }
  bool is_boundary(const BitVector& v) const { return boundary_space.contains(v); }
};

HomologyData homology(const ChainComplexF2& c, std::size_t degree);

}  // namespace dimjump
