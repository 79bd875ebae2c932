#include "dimjump/codes.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dimjump {

ChainComplexR ClassicalCode::complex() const {
  return ChainComplexR(group, {check.rows(), check.cols()}, {check});
}

void CssCode::check_invariants() const {
  if (hx.cols() != n || hz.cols() != n) throw std::logic_error("CSS qubit count mismatch");
  if (!(hx * hz.transpose()).is_zero()) throw std::logic_error("Hx Hz^T != 0");
  if (mz) {
    if (mz->cols() != hz.rows()) throw std::logic_error("Mz column count mismatch");
    if (!((*mz) * hz).is_zero()) throw std::logic_error("Mz Hz != 0");
  }
}

std::size_t CssCode::k() const { return n - rank(hx) - rank(hz); }

namespace {

// Qubit sectors of a 2D product: A1B0 then A0B1.
std::vector<SectorSpan> qubit_sectors_2d(const std::vector<ClassicalCode>& codes,
                                         std::uint64_t l) {
  std::size_t na = codes[0].bits(), ra = codes[0].checks();
  std::size_t nb = codes[1].bits(), rb = codes[1].checks();
  return {{"A1B0", 0, na * rb * l}, {"A0B1", na * rb * l, ra * nb * l}};
}

// Qubit sectors of a 3D product: A1B0C0, A0B1C0, A0B0C1. The first two are
// the halves of (AB)1 (x) C0; the AB cell index is the slow one so they stay
// contiguous.
std::vector<SectorSpan> qubit_sectors_3d(const std::vector<ClassicalCode>& codes,
                                         std::uint64_t l) {
  std::size_t na = codes[0].bits(), ra = codes[0].checks();
  std::size_t nb = codes[1].bits(), rb = codes[1].checks();
  std::size_t nc = codes[2].bits(), rc = codes[2].checks();
  std::size_t s1 = na * rb * rc * l;
  std::size_t s2 = ra * nb * rc * l;
  std::size_t s3 = ra * rb * nc * l;
  return {{"A1B0C0", 0, s1}, {"A0B1C0", s1, s2}, {"A0B0C1", s1 + s2, s3}};
}

}  // namespace

LpCode build_lp(const std::vector<ClassicalCode>& codes) {
  if (codes.size() != 2 && codes.size() != 3)
    throw std::invalid_argument("lifted product takes 2 or 3 classical codes");
  for (const ClassicalCode& c : codes)
    if (!(c.group == codes.front().group))
      throw std::invalid_argument("lifted product requires a common group");

  ChainComplexR complex = tensor_product(codes[0].complex(), codes[1].complex());
  if (codes.size() == 3) complex = tensor_product(complex, codes[2].complex());

  ChainComplexF2 binary = binary_lift(complex);
  CssCode css;
  css.hx = binary.boundary(1);
  css.hz = binary.boundary(2).transpose();
  if (codes.size() == 3) css.mz = binary.boundary(3).transpose();
  css.n = binary.space_dim(1);
  const std::uint64_t l = complex.group().size;
  css.sectors = codes.size() == 2 ? qubit_sectors_2d(codes, l) : qubit_sectors_3d(codes, l);
  css.provenance = codes.size() == 2 ? "lp2" : "lp3";
  css.check_invariants();
  return LpCode{std::move(css), std::move(complex), codes};
}

LpCode bt_direct(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                 const GroupAlgebraElement& c) {
  const FiniteAbelianGroup& g = a.group();
  if (!(b.group() == g) || !(c.group() == g))
    throw std::invalid_argument("tricycle polynomials must share a group");

  auto scalar = [&](const GroupAlgebraElement& e) {
    RMatrix m(g, 1, 1);
    m.at(0, 0) = e;
    return ClassicalCode{g, m};
  };
  LpCode lp = build_lp({scalar(a), scalar(b), scalar(c)});

  // Direct form: Hx = B([a b c]), Hz = B of the conjugate block matrix,
  // Mz = B([c* b* a*]); must agree with the product construction bitwise.
  RMatrix hx_r(g, 1, 3);
  hx_r.at(0, 0) = a;
  hx_r.at(0, 1) = b;
  hx_r.at(0, 2) = c;
  RMatrix hz_r(g, 3, 3);
  hz_r.at(0, 0) = antipode(b);
  hz_r.at(0, 1) = antipode(a);
  hz_r.at(1, 0) = antipode(c);
  hz_r.at(1, 2) = antipode(a);
  hz_r.at(2, 1) = antipode(c);
  hz_r.at(2, 2) = antipode(b);
  RMatrix mz_r(g, 1, 3);
  mz_r.at(0, 0) = antipode(c);
  mz_r.at(0, 1) = antipode(b);
  mz_r.at(0, 2) = antipode(a);

  CssCode direct;
  direct.hx = binary_rep(hx_r);
  direct.hz = binary_rep(hz_r);
  direct.mz = binary_rep(mz_r);
  direct.n = direct.hx.cols();
  direct.sectors = lp.css.sectors;
  direct.provenance = "bt";
  direct.check_invariants();

  if (!(direct.hx == lp.css.hx) || !(direct.hz == lp.css.hz) || !(*direct.mz == *lp.css.mz))
    throw std::logic_error("bt_direct disagrees with the product construction");
  lp.css.provenance = "bt";
  return lp;
}

CodeParameters compute_parameters(const CssCode& code) {
  CodeParameters p;
  p.n = code.n;
  p.k = code.k();
  p.hx_row_weight = code.hx.max_row_weight();
  p.hx_col_weight = code.hx.max_col_weight();
  p.hz_row_weight = code.hz.max_row_weight();
  p.hz_col_weight = code.hz.max_col_weight();
  p.max_stabilizer_weight = std::max(p.hx_row_weight, p.hz_row_weight);
  return p;
}

LogicalBasis logical_basis(const CssCode& code) {
  std::size_t k = code.k();
  if (k == 0) throw std::invalid_argument("code has no logical qubits");

  std::vector<BitVector> z_cycles = kernel_basis(code.hx);
  RowSpace z_stab(code.hz);
  LogicalBasis basis;
  basis.z_reps = quotient_reps(z_cycles, z_stab.basis());

  std::vector<BitVector> x_cycles = kernel_basis(code.hz);
  RowSpace x_stab(code.hx);
  basis.x_reps = quotient_reps(x_cycles, x_stab.basis());

  if (basis.z_reps.size() != k || basis.x_reps.size() != k)
    throw std::logic_error("homology dimension disagrees with rank-derived k");

  BitMatrix pairing(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      BitVector overlap = basis.x_reps[i];
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < overlap.words().size(); ++w)
        acc ^= overlap.words()[w] & basis.z_reps[j].words()[w];
      pairing.set(i, j, std::popcount(acc) & 1);
    }

  // Normalize the X side so the symplectic pairing becomes the identity.
  RrefResult rr = rref(BitMatrix::hstack(pairing, BitMatrix::identity(k)));
  if (rr.rank != k) throw std::logic_error("symplectic pairing is singular");
  BitMatrix inverse(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) inverse.set(r, c, rr.reduced.get(r, k + c));
  std::vector<BitVector> normalized(k, BitVector(code.n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (inverse.get(i, j)) normalized[i].xor_with(basis.x_reps[j]);
  basis.x_reps = std::move(normalized);

  basis.pairing = BitMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < basis.x_reps[i].words().size(); ++w)
        acc ^= basis.x_reps[i].words()[w] & basis.z_reps[j].words()[w];
      if (static_cast<bool>(std::popcount(acc) & 1) != (i == j))
        throw std::logic_error("pairing normalization failed");
    }
  return basis;
}

std::size_t kunneth_k_hgp(const LpCode& qab, const ClassicalCode& cc) {
  if (!qab.complex.group().is_trivial() || !cc.group.is_trivial())
    throw std::invalid_argument("Kuenneth prediction applies to the trivial group only");
  ChainComplexF2 q = binary_lift(qab.complex);
  std::size_t h1_q = homology(q, 1).dimension;
  std::size_t h0_q = homology(q, 0).dimension;
  BitMatrix hc = binary_rep(cc.check);
  std::size_t h1_c = cc.bits() - rank(hc);    // kernel of Hc
  std::size_t h0_c = cc.checks() - rank(hc);  // cokernel of Hc
  return h1_q * h0_c + h0_q * h1_c;
}

std::int64_t spacetime_cost(std::size_t n, std::size_t num_x_checks, std::size_t num_z_checks,
                            std::size_t k, double success_rate, std::size_t max_stab_weight) {
  if (n == 0 || k == 0) throw std::invalid_argument("counts must be positive");
  if (!(success_rate > 0.0) || success_rate > 1.0)
    throw std::invalid_argument("success rate must lie in (0, 1]");
  double qubits = static_cast<double>(n + num_x_checks + num_z_checks);
  double cost = qubits / (static_cast<double>(k) * success_rate) *
                static_cast<double>(max_stab_weight + 2);
  return std::llround(cost);
}

TorusLayout torus_layout(const LpCode& code) {
  if (code.css.provenance != "bt")
    throw std::invalid_argument("torus layout requires a tricycle construction");
  const FiniteAbelianGroup& g = code.complex.group();
  if (g.factors() != 2) throw std::invalid_argument("torus layout requires a bivariate group");

  TorusLayout layout;
  layout.lx = g.orders[0];
  layout.ly = g.orders[1];
  // Sublattice offsets in thirds of a cell, one per sector.
  static constexpr std::uint32_t kOffsets[3][2] = {{0, 0}, {1, 2}, {2, 1}};
  const std::uint64_t l = g.size;
  for (std::size_t sector = 0; sector < 3; ++sector)
    for (std::uint64_t idx = 0; idx < l; ++idx) {
      std::vector<std::uint32_t> exps = g.exponents_of(idx);
      layout.sites.push_back({sector * l + idx, sector, exps[0], exps[1], kOffsets[sector][0],
                              kOffsets[sector][1]});
    }
  return layout;
}

bool checks_translation_invariant(const BitMatrix& m, const FiniteAbelianGroup& group,
                                  std::size_t sector_count) {
  const std::uint64_t l = group.size;
  if (m.cols() != sector_count * l) throw std::invalid_argument("column count mismatch");
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
  std::sort(rows.begin(), rows.end());

  for (std::size_t f = 0; f < group.factors(); ++f) {
    std::vector<std::uint32_t> gen(group.factors(), 0);
    gen[f] = 1 % group.orders[f];
    std::uint64_t shift = group.index_of(gen);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      BitVector moved(m.cols());
      for (std::size_t c : m.row(r).set_bits()) {
        std::size_t sector = c / l;
        moved.set(sector * l + group.add(c % l, shift), true);
      }
      if (!std::binary_search(rows.begin(), rows.end(), moved.to_string())) return false;
    }
  }
  return true;
}

std::vector<BitVector> reduced_weight_logicals(const CssCode& code, PauliBasis basis,
                                               std::uint64_t seed, std::size_t restarts) {
  const BitMatrix& opposite = basis == PauliBasis::Z ? code.hx : code.hz;
  const BitMatrix& same = basis == PauliBasis::Z ? code.hz : code.hx;

  std::vector<BitVector> cycles = kernel_basis(opposite);
  RowSpace stab_space(same);
  std::vector<BitVector> reps = quotient_reps(cycles, stab_space.basis());
  if (reps.empty()) return {};

  std::vector<BitVector> stab_rows;
  for (const BitVector& v : stab_space.basis()) stab_rows.push_back(v);
  // Low-weight generator rows make better local moves than echelon rows.
  for (std::size_t r = 0; r < same.rows(); ++r) stab_rows.push_back(same.row(r));

  std::mt19937_64 rng(seed);
  auto descend = [&](BitVector v) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (const BitVector& s : stab_rows) {
        BitVector trial = v;
        trial.xor_with(s);
        if (trial.popcount() < v.popcount()) {
          v = std::move(trial);
          improved = true;
        }
      }
    }
    return v;
  };

  std::vector<BitVector> best;
  const std::size_t k = reps.size();
  const std::size_t class_limit = std::min<std::size_t>((std::size_t{1} << k) - 1, 31);
  for (std::size_t cls = 1; cls <= class_limit; ++cls) {
    BitVector base(code.n);
    for (std::size_t i = 0; i < k; ++i)
      if ((cls >> i) & 1) base.xor_with(reps[i]);
    BitVector champion = descend(base);
    for (std::size_t r = 0; r < restarts; ++r) {
      BitVector v = base;
      // random coset offset
      for (const BitVector& s : stab_rows)
        if (rng() & 1) v.xor_with(s);
      v = descend(std::move(v));
      if (v.popcount() < champion.popcount()) champion = std::move(v);
    }
    best.push_back(std::move(champion));
  }
  return best;
}

}  // namespace dimjump
