#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dimjump {

/// Packed bit vector over GF(2). Padding bits past `size()` are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  static BitVector from_indices(std::size_t length, std::initializer_list<std::size_t> ones);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVector& other);
  std::size_t popcount() const;
  bool is_zero() const;
  std::vector<std::size_t> set_bits() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const BitVector& other) const = default;

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVector operator^(const BitVector& a, const BitVector& b);

/// Dense bit-packed matrix over GF(2), row-major. Trailing bits of the last
/// word in each row are zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), payload_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (payload_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
      payload_[r * wpr_ + (c >> 6)] |= mask;
    else
      payload_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  std::uint64_t* row_words(std::size_t r) { return payload_.data() + r * wpr_; }
  const std::uint64_t* row_words(std::size_t r) const { return payload_.data() + r * wpr_; }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void xor_row_into(std::size_t src, std::size_t dst);  // dst ^= src
  void swap_rows(std::size_t a, std::size_t b);
  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  std::size_t max_row_weight() const;
  std::size_t max_col_weight() const;

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& other) const;
  BitMatrix operator+(const BitMatrix& other) const;
  BitVector mul_vec(const BitVector& v) const;

  bool is_zero() const;
  bool operator==(const BitMatrix& other) const = default;

  /// Stacks [top; bottom] / [left | right]; dimensions must conform.
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
  static BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> payload_;
};

struct RrefResult {
  std::size_t rank = 0;
  BitMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row-echelon form with deterministic leftmost pivoting.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Basis of {v : M v = 0}; each vector re-verified against M before return.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Solves A x = b; returns a witness when b lies in the column space of A.
/// The witness is always re-substituted before being returned.
std::optional<BitVector> solve_in_span(const BitMatrix& a, const BitVector& b);

/// Precomputed elimination of A for repeated right-hand sides.
class LinearSolver {
 public:
  explicit LinearSolver(const BitMatrix& a);
  std::optional<BitVector> solve(const BitVector& b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  BitMatrix a_;
  BitMatrix reduced_;
  BitMatrix transform_;  // transform_ * a_ = reduced_
  std::vector<std::size_t> pivots_;
};

/// Row space of a matrix in rref form; supports membership and reduction.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(const BitMatrix& m);
  explicit RowSpace(const std::vector<BitVector>& rows);

  std::size_t dimension() const { return basis_.size(); }
  /// Reduces v against the stored basis (kills leading bits).
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
  /// Inserts v if independent; returns true when the dimension grew.
  bool insert(BitVector v);
  const std::vector<BitVector>& basis() const { return basis_; }

 private:
  std::vector<BitVector> basis_;           // rows in echelon form
  std::vector<std::size_t> leading_bits_;  // leading column per basis row
};

/// Kronecker product over GF(2).
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

/// Extends basis B to a basis of Z; returns the new representatives.
/// Throws std::invalid_argument if span(B) is not contained in span(Z).
std::vector<BitVector> quotient_reps(const std::vector<BitVector>& z_basis,
                                     const std::vector<BitVector>& b_basis);

}  // namespace dimjump
