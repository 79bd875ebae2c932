#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimjump/f2_linalg.hpp"

namespace dimjump {

/// Finite abelian group as a product of cyclic factors. Elements are
/// exponent vectors; the canonical total order is lexicographic with the
/// first factor slowest, so element index i maps to mixed-radix digits.
struct FiniteAbelianGroup {
  std::vector<std::uint32_t> orders;
  std::uint64_t size = 1;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factor_orders);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup({1}); }

  std::size_t factors() const { return orders.size(); }
  bool is_trivial() const { return size == 1; }
  bool odd_order() const { return size % 2 == 1; }

  std::uint64_t index_of(std::span<const std::uint32_t> exps) const;
  std::vector<std::uint32_t> exponents_of(std::uint64_t index) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate(std::uint64_t a) const;

  bool operator==(const FiniteAbelianGroup& other) const { return orders == other.orders; }
};

/// Element of F2[G]: a duplicate-free set of group elements (monomials with
/// coefficient 1), stored as sorted canonical indices.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(FiniteAbelianGroup group) : group_(std::move(group)) {}
  GroupAlgebraElement(FiniteAbelianGroup group, std::vector<std::uint64_t> sorted_support);

  static GroupAlgebraElement zero(const FiniteAbelianGroup& g) { return GroupAlgebraElement(g); }
  static GroupAlgebraElement one(const FiniteAbelianGroup& g);
  static GroupAlgebraElement monomial(const FiniteAbelianGroup& g,
                                      std::span<const std::uint32_t> exps);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::uint64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t weight() const { return support_.size(); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
  bool operator==(const GroupAlgebraElement& other) const {
    return group_ == other.group_ && support_ == other.support_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> support_;
};

/// Ring involution g -> g^{-1}; under the regular representation it
/// corresponds to matrix transposition.
GroupAlgebraElement antipode(const GroupAlgebraElement& a);

/// Parses a polynomial string such as "x^2*y + x^2*y^2", "1 + x*y^3", "0".
/// Variables are x, y, z for up to three factors, x1..xk beyond that.
GroupAlgebraElement parse_element(std::string_view text, const FiniteAbelianGroup& group);
std::string render(const GroupAlgebraElement& a);

/// Regular representation: column h holds the expansion of a*h under the
/// canonical element order. B is a ring homomorphism and
/// B(antipode(a)) = B(a)^T.
BitMatrix binary_rep(const GroupAlgebraElement& a);

/// Matrix over R = F2[G].
class RMatrix {
 public:
  RMatrix(FiniteAbelianGroup group, std::size_t rows, std::size_t cols);

  static RMatrix identity(const FiniteAbelianGroup& g, std::size_t n);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GroupAlgebraElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GroupAlgebraElement& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RMatrix operator*(const RMatrix& other) const;
  RMatrix operator+(const RMatrix& other) const;
  /// Transpose with entrywise antipode; an involution.
  RMatrix dagger() const;
  bool is_zero() const;
  bool operator==(const RMatrix& other) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t rows_, cols_;
  std::vector<GroupAlgebraElement> entries_;
};

/// Block binary representation: block (p, q) is binary_rep(M[p, q]).
BitMatrix binary_rep(const RMatrix& m);

}  // namespace dimjump
