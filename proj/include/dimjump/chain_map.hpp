#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimjump/chain_complex.hpp"
#include "dimjump/codes.hpp"

namespace dimjump {

/// Chain map between two complexes of equal length: per-degree R-linear maps
/// gamma_i with d_i^target gamma_i = gamma_{i-1} d_i^source.
struct ChainMapR {
  ChainComplexR source;
  ChainComplexR target;
  std::vector<RMatrix> components;  // gamma_0 .. gamma_D

  const RMatrix& gamma(std::size_t degree) const { return components.at(degree); }
};

struct ChainMapReport {
  bool ok = true;
  bool binary_level = false;  // failing square found after lifting
  std::size_t degree = 0;
  std::size_t row = 0, col = 0;
  std::string to_string() const;
};

/// Checks every commuting square over R and again after the binary lift.
ChainMapReport verify_chain_map(const ChainMapR& map);

ChainMapR identity_chain_map(const ChainComplexR& complex);
/// Degreewise composition outer . inner.
ChainMapR compose(const ChainMapR& outer, const ChainMapR& inner);

/// Product of chain maps: gx between 2-complexes, gy between 1-complexes,
/// giving a map between the product 3-complexes with block-diagonal
/// components in the product sector order.
ChainMapR tensor_chain_maps(const ChainMapR& gx, const ChainMapR& gy);

enum class Component2D { AB, AC, BC };

/// Canonical inclusion of a 2D component code into the 3D product built from
/// (a, b, c): gamma_1 = [I (x) e_q ; 0] with q a 1-based row of the third
/// code's check matrix. Components other than AB are reached through the
/// factor-permutation isomorphism of the triple product.
ChainMapR inclusion_chain_map(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c, Component2D component, std::size_t q);

/// One inclusion per unit-vector generator of coker(H_C) (trivial group
/// only); the binary gamma_1 images are pairwise disjoint column sets.
std::vector<ChainMapR> hgp_slice_maps(const ClassicalCode& a, const ClassicalCode& b,
                                      const ClassicalCode& c);

struct LogicalCnotMap {
  BitMatrix gamma1_binary;  // physical CNOT pattern, n_target x n_source
  BitMatrix bar_gamma1;     // induced map on H_1, k_target x k_source
  bool injective = false;
  /// When injective: invertible T with T * bar_gamma1 = [I; 0]; rows of T
  /// express the adapted target logical basis in the original one.
  std::optional<BitMatrix> transversal_basis;
};

/// Decomposes gamma_1(z_rep) into target logicals plus Z-stabilizers for
/// every source representative. Throws if an image fails to decompose
/// (which would mean the chain map is broken).
LogicalCnotMap induced_logical_map(const ChainMapR& map, const LogicalBasis& source_basis,
                                   const LogicalBasis& target_basis, const CssCode& target);

/// Physical CNOT schedule: (control qubit in the 3D code, target qubit in
/// the 2D code) for every nonzero entry of the binary gamma_1.
std::vector<std::pair<std::size_t, std::size_t>> cnot_schedule(const BitMatrix& gamma1_binary);

struct IdealCertificate {
  GroupAlgebraElement u, v;
};

/// Searches for u, v with u*a + v*b = c by solving [B(a) | B(b)] (u; v) =
/// vec(c); any witness is re-verified with ring arithmetic before return.
std::optional<IdealCertificate> ideal_membership(const GroupAlgebraElement& a,
                                                 const GroupAlgebraElement& b,
                                                 const GroupAlgebraElement& c);

}  // namespace dimjump
