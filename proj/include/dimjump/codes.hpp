#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimjump/chain_complex.hpp"
#include "dimjump/f2_linalg.hpp"
#include "dimjump/group_algebra.hpp"

namespace dimjump {

/// Classical code over R with check matrix H (checks x bits). As a
/// 1-complex: bits in degree 1, checks in degree 0, boundary H.
struct ClassicalCode {
  FiniteAbelianGroup group;
  RMatrix check;

  std::size_t bits() const { return check.cols(); }
  std::size_t checks() const { return check.rows(); }
  ChainComplexR complex() const;
};

struct SectorSpan {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// CSS code in binary form. Invariants Hx Hz^T = 0 and, when present,
/// Mz Hz = 0 are enforced at construction.
struct CssCode {
  BitMatrix hx, hz;
  std::optional<BitMatrix> mz;
  std::size_t n = 0;
  std::vector<SectorSpan> sectors;
  std::string provenance;

  void check_invariants() const;
  std::size_t k() const;
};

/// A CSS code together with the R-level complex and base codes it came from.
struct LpCode {
  CssCode css;
  ChainComplexR complex;
  std::vector<ClassicalCode> factors;
};

/// Lifted product of 2 or 3 classical codes over a common group. Length-2
/// builds the 2D code (Hx = d1, Hz = d2^T); length-3 additionally carries
/// the meta-check matrix Mz = d3^T.
LpCode build_lp(const std::vector<ClassicalCode>& codes);

/// Direct construction of a bivariate/trivariate tricycle code from three
/// ring elements: Hx = B([a b c]) with the conjugate-block Hz and Mz.
/// Bit-identical to build_lp on the three 1x1 codes.
LpCode bt_direct(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                 const GroupAlgebraElement& c);

enum class PauliBasis { X, Z };

struct DistanceResult {
  bool exact = false;
  std::size_t distance = 0;        // valid when exact
  std::size_t lower_bound = 1;     // min weight not excluded
  std::optional<std::size_t> upper_bound;
  std::optional<BitVector> witness;
  bool undefined = false;  // k = 0: no logical operators exist

  std::string to_string() const;
};

struct DistanceOptions {
  std::size_t weight_cap = 0;          // 0: derive from candidate_budget
  std::uint64_t candidate_budget = 50'000'000;
  std::vector<BitVector> hints;        // candidate logical vectors (upper bounds)
};

/// Exhaustive minimum-weight logical search for one basis, ascending weight
/// with early exit. A vector is logical when it lies in the kernel of the
/// opposite check matrix but not in the row space of the same-type one.
DistanceResult distance_search(const CssCode& code, PauliBasis basis, const DistanceOptions& opts);

/// Largest cap w such that sum_{v<=w} C(n, v) stays within budget.
std::size_t auto_weight_cap(std::size_t n, std::uint64_t budget);

struct CodeParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t max_stabilizer_weight = 0;
  std::size_t hx_row_weight = 0, hx_col_weight = 0;
  std::size_t hz_row_weight = 0, hz_col_weight = 0;
};

CodeParameters compute_parameters(const CssCode& code);

struct LogicalBasis {
  std::vector<BitVector> z_reps;  // representatives of H_1
  std::vector<BitVector> x_reps;  // representatives of H^1, normalized so
                                  // that <x_i, z_j> = delta_ij
  BitMatrix pairing;              // identity after normalization
};

LogicalBasis logical_basis(const CssCode& code);

/// Kuenneth prediction of k for the 3D product of a 2D HGP code and a
/// classical code over the trivial group:
/// dim H1(Qab) * dim H0(Cc) + dim H0(Qab) * dim H1(Cc).
std::size_t kunneth_k_hgp(const LpCode& qab, const ClassicalCode& cc);

/// Space-time cost per logical qubit:
/// round((n + #X + #Z) / (k * success_rate) * (max_stab_weight + 2)).
std::int64_t spacetime_cost(std::size_t n, std::size_t num_x_checks, std::size_t num_z_checks,
                            std::size_t k, double success_rate, std::size_t max_stab_weight);

/// Triangular-lattice torus embedding of a bivariate tricycle code: three
/// sublattices (one per qubit sector) at fixed fractional offsets.
struct TorusSite {
  std::size_t qubit;   // index into the code
  std::size_t sector;  // 0..2
  std::uint32_t i, j;  // torus cell
  // coordinate = (i + dx/3, j + dy/3)
  std::uint32_t dx, dy;
};

struct TorusLayout {
  std::uint32_t lx = 0, ly = 0;
  std::vector<TorusSite> sites;
};

TorusLayout torus_layout(const LpCode& code);

/// True when translating every check support by the given group generator
/// permutation maps the row set of m onto itself.
bool checks_translation_invariant(const BitMatrix& m, const FiniteAbelianGroup& group,
                                  std::size_t sector_count);

/// Randomized coset weight reduction: returns low-weight logical vectors
/// (one per nonzero logical class explored) for use as distance hints.
std::vector<BitVector> reduced_weight_logicals(const CssCode& code, PauliBasis basis,
                                               std::uint64_t seed, std::size_t restarts);

}  // namespace dimjump
