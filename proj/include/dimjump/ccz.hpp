#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimjump/codes.hpp"

namespace dimjump {

/// Physical CCZ circuit across three code blocks: the set of (i, j, k) with
/// delta_{ijk} = 1. Triples are kept sorted and duplicate-free.
struct CczTensor {
  std::array<std::size_t, 3> block_sizes{};
  std::vector<std::array<std::uint32_t, 3>> triples;

  void canonicalize();  // sorts, removes duplicates, validates ranges
  /// Max over all physical qubits of the number of triples containing it.
  std::size_t depth() const;
};

/// Trilinear form f(u, v, w) = sum delta_{ijk} u_i v_j w_k over F2.
bool cup_form(const CczTensor& delta, const BitVector& u, const BitVector& v, const BitVector& w);

struct CupValidityReport {
  bool ok = true;
  std::size_t slot = 0;        // which argument held the stabilizer
  std::size_t stabilizer = 0;  // X-check row index
  std::size_t cocycle_a = 0, cocycle_b = 0;
  std::string to_string() const;
};

/// delta induces a trilinear map on cohomology iff f vanishes whenever any
/// slot carries an X stabilizer and the others carry cocycles; multilinearity
/// reduces this to generator checks.
CupValidityReport verify_cup_validity(const CczTensor& delta, const CssCode& c1,
                                      const CssCode& c2, const CssCode& c3);

struct LogicalCczTensor {
  std::array<std::size_t, 3> dims{};
  std::vector<std::array<std::uint32_t, 3>> entries;
};

struct InducedCczResult {
  LogicalCczTensor logical;
  bool nontrivial = false;
  std::size_t depth = 0;
};

/// Evaluates f on all triples of logical X representatives. Requires a
/// delta that already passed the validity check.
InducedCczResult induced_logical_tensor(const CczTensor& delta, const LogicalBasis& b1,
                                        const LogicalBasis& b2, const LogicalBasis& b3);

/// Group-equivariant parameterization: offsets (h2, h3) per ordered sector
/// triple; the expansion places a triple ((s1, g), (s2, g h2), (s3, g h3))
/// for every g.
struct EquivariantCcz {
  FiniteAbelianGroup group;
  std::map<std::array<std::size_t, 3>, std::vector<std::array<std::uint64_t, 2>>> offset_sets;

  CczTensor expand() const;
};

struct CczSearchOptions {
  std::size_t depth_target = 2;
  std::uint64_t node_budget = 1u << 22;
  bool widen_to_all_sector_triples = false;  // beyond sector permutations
};

struct CczSearchResult {
  CczTensor delta;
  EquivariantCcz form;
  std::size_t depth = 0;
};

/// Searches for a valid, nontrivial, minimum-depth equivariant delta on
/// three copies of a tricycle code. Returns nullopt when the budget is
/// exhausted without a solution.
std::optional<CczSearchResult> equivariant_solve(const LpCode& code, const LogicalBasis& basis,
                                                 const CczSearchOptions& opts);

/// Correlated-Z channel propagated through the CCZ circuit: for each qubit
/// (block, i), a Z error on that qubit plus every partner appearing with it
/// in a triple, with probability p.
struct CorrelatedZError {
  std::vector<std::pair<std::size_t, std::size_t>> support;  // (block, qubit)
  double probability = 0;
};

std::vector<CorrelatedZError> propagated_error_channel(const CczTensor& delta, double p);

/// Text form: one "i j k" line per triple, 0-indexed, sorted.
void write_triples(std::ostream& os, const CczTensor& delta);
CczTensor read_triples(std::istream& is, std::array<std::size_t, 3> block_sizes);

}  // namespace dimjump
