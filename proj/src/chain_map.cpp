#include "dimjump/chain_map.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace dimjump {

std::string ChainMapReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "square fails at degree " << degree << (binary_level ? " (binary)" : " (over R)")
     << ", entry (" << row << ", " << col << ")";
  return os.str();
}

ChainMapReport verify_chain_map(const ChainMapR& map) {
  const std::size_t d = map.source.length();
  if (map.target.length() != d || map.components.size() != d + 1)
    throw std::invalid_argument("chain map arity mismatch");
  for (std::size_t i = 1; i <= d; ++i) {
    RMatrix lhs = map.target.boundary(i) * map.gamma(i);
    RMatrix rhs = map.gamma(i - 1) * map.source.boundary(i);
    if (!(lhs == rhs)) {
      RMatrix diff = lhs + rhs;
      for (std::size_t r = 0; r < diff.rows(); ++r)
        for (std::size_t c = 0; c < diff.cols(); ++c)
          if (!diff.at(r, c).is_zero()) return {false, false, i, r, c};
    }
  }
  for (std::size_t i = 1; i <= d; ++i) {
    BitMatrix lhs = binary_rep(map.target.boundary(i)) * binary_rep(map.gamma(i));
    BitMatrix rhs = binary_rep(map.gamma(i - 1)) * binary_rep(map.source.boundary(i));
    if (!(lhs == rhs)) {
      BitMatrix diff = lhs + rhs;
      for (std::size_t r = 0; r < diff.rows(); ++r)
        for (std::size_t c = 0; c < diff.cols(); ++c)
          if (diff.get(r, c)) return {false, true, i, r, c};
    }
  }
  return {};
}

ChainMapR identity_chain_map(const ChainComplexR& complex) {
  std::vector<RMatrix> components;
  for (std::size_t i = 0; i <= complex.length(); ++i)
    components.push_back(RMatrix::identity(complex.group(), complex.module_dim(i)));
  return {complex, complex, std::move(components)};
}

ChainMapR compose(const ChainMapR& outer, const ChainMapR& inner) {
  if (outer.source.length() != inner.target.length())
    throw std::invalid_argument("composition arity mismatch");
  std::vector<RMatrix> components;
  for (std::size_t i = 0; i < inner.components.size(); ++i)
    components.push_back(outer.gamma(i) * inner.gamma(i));
  return {inner.source, outer.target, std::move(components)};
}

namespace {

RMatrix r_kron(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.group(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (a.at(ar, ac).is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (b.at(br, bc).is_zero()) continue;
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
        }
    }
  return out;
}

// Places `block` into `m` at the given cell offsets.
void put_block(RMatrix& m, const RMatrix& block, std::size_t row_off, std::size_t col_off) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      if (!block.at(r, c).is_zero()) m.at(row_off + r, col_off + c) = block.at(r, c);
}

}  // namespace

ChainMapR tensor_chain_maps(const ChainMapR& gx, const ChainMapR& gy) {
  if (gx.source.length() != 2 || gy.source.length() != 1)
    throw std::invalid_argument("expected a 2-complex map and a 1-complex map");
  if (!(gx.source.group() == gy.source.group()))
    throw std::invalid_argument("group mismatch between chain map factors");

  ChainComplexR source = tensor_product(gx.source, gy.source);
  ChainComplexR target = tensor_product(gx.target, gy.target);

  std::vector<RMatrix> components;
  for (std::size_t n = 0; n <= 3; ++n) {
    RMatrix gamma(source.group(), target.module_dim(n), source.module_dim(n));
    for (const ProductSector& src : source.sectors()[n]) {
      for (const ProductSector& dst : target.sectors()[n]) {
        if (src.deg_a != dst.deg_a || src.deg_b != dst.deg_b) continue;
        put_block(gamma, r_kron(gx.gamma(src.deg_a), gy.gamma(src.deg_b)), dst.offset,
                  src.offset);
      }
    }
    components.push_back(std::move(gamma));
  }
  return {std::move(source), std::move(target), std::move(components)};
}

namespace {

// Trivial subcomplex 0 -> R^1 of a classical code.
ChainComplexR trivial_classical_complex(const FiniteAbelianGroup& g) {
  return ChainComplexR(g, {1, 0}, {RMatrix(g, 1, 0)});
}

// Chain map C0 -> C embedding the trivial subcomplex at check row q.
ChainMapR shortening_map(const ClassicalCode& code, std::size_t q) {
  if (q < 1 || q > code.checks()) throw std::invalid_argument("row q out of range");
  RMatrix gamma0(code.group, code.checks(), 1);
  gamma0.at(q - 1, 0) = GroupAlgebraElement::one(code.group);
  RMatrix gamma1(code.group, code.bits(), 0);
  return {trivial_classical_complex(code.group), code.complex(), {gamma0, gamma1}};
}

// Canonical inclusion tensor(Q2D, C0) -> tensor(Q2D, Cthird).
ChainMapR inclusion_into_ordered_product(const ClassicalCode& first, const ClassicalCode& second,
                                         const ClassicalCode& third, std::size_t q) {
  ChainComplexR q2d = tensor_product(first.complex(), second.complex());
  ChainMapR gx = identity_chain_map(q2d);
  ChainMapR gy = shortening_map(third, q);
  return tensor_chain_maps(gx, gy);
}

// Chain map isomorphism LP(F_perm(0), F_perm(1), F_perm(2)) -> LP(A, B, C)
// given by reordering tensor factors; over F2 there are no Koszul signs, so
// the factor shuffle commutes with the boundaries.
ChainMapR factor_permutation_iso(const std::array<ClassicalCode, 3>& canonical,
                                 const std::array<std::size_t, 3>& perm) {
  const FiniteAbelianGroup& g = canonical[0].group;
  ChainComplexR target =
      tensor_product(tensor_product(canonical[0].complex(), canonical[1].complex()),
                     canonical[2].complex());
  ChainComplexR source = tensor_product(
      tensor_product(canonical[perm[0]].complex(), canonical[perm[1]].complex()),
      canonical[perm[2]].complex());

  // Cell dimensions per factor and degree (0: checks, 1: bits).
  auto factor_dim = [&](std::size_t factor, std::size_t deg) {
    return deg == 1 ? canonical[factor].bits() : canonical[factor].checks();
  };

  // Sectors of a triple product in build order: descending (d1, d2, d3) lex.
  auto sector_list = [](std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (int mask = 7; mask >= 0; --mask) {
      std::array<std::size_t, 3> degs = {static_cast<std::size_t>((mask >> 2) & 1),
                                         static_cast<std::size_t>((mask >> 1) & 1),
                                         static_cast<std::size_t>(mask & 1)};
      if (degs[0] + degs[1] + degs[2] == n) out.push_back(degs);
    }
    return out;
  };

  std::vector<RMatrix> components;
  for (std::size_t n = 0; n <= 3; ++n) {
    RMatrix gamma(g, target.module_dim(n), source.module_dim(n));
    auto src_sectors = sector_list(n);  // degrees w.r.t. build order (perm)
    auto dst_sectors = sector_list(n);  // degrees w.r.t. canonical order

    // Offsets of each sector inside the flattened module.
    auto offsets = [&](const std::vector<std::array<std::size_t, 3>>& sectors,
                       const std::array<std::size_t, 3>& factors) {
      std::vector<std::size_t> off(sectors.size() + 1, 0);
      for (std::size_t s = 0; s < sectors.size(); ++s) {
        std::size_t dim = 1;
        for (std::size_t f = 0; f < 3; ++f) dim *= factor_dim(factors[f], sectors[s][f]);
        off[s + 1] = off[s] + dim;
      }
      return off;
    };
    std::array<std::size_t, 3> id_factors = {0, 1, 2};
    auto src_off = offsets(src_sectors, perm);
    auto dst_off = offsets(dst_sectors, id_factors);

    for (std::size_t s = 0; s < src_sectors.size(); ++s) {
      // Degrees carried by each canonical factor under this source sector.
      std::array<std::size_t, 3> canon_degs{};
      for (std::size_t f = 0; f < 3; ++f) canon_degs[perm[f]] = src_sectors[s][f];
      std::size_t t = 0;
      while (dst_sectors[t] != canon_degs) ++t;

      std::array<std::size_t, 3> sdim = {factor_dim(perm[0], src_sectors[s][0]),
                                         factor_dim(perm[1], src_sectors[s][1]),
                                         factor_dim(perm[2], src_sectors[s][2])};
      // Walk source cells (p0, p1, p2) over the permuted factors and place a
      // unit at the canonical flattening of the same per-factor indices.
      for (std::size_t p0 = 0; p0 < sdim[0]; ++p0)
        for (std::size_t p1 = 0; p1 < sdim[1]; ++p1)
          for (std::size_t p2 = 0; p2 < sdim[2]; ++p2) {
            std::array<std::size_t, 3> canon_idx{};
            canon_idx[perm[0]] = p0;
            canon_idx[perm[1]] = p1;
            canon_idx[perm[2]] = p2;
            std::size_t src_cell = (p0 * sdim[1] + p1) * sdim[2] + p2;
            std::size_t dst_cell =
                (canon_idx[0] * factor_dim(1, canon_degs[1]) + canon_idx[1]) *
                    factor_dim(2, canon_degs[2]) +
                canon_idx[2];
            gamma.at(dst_off[t] + dst_cell, src_off[s] + src_cell) =
                GroupAlgebraElement::one(g);
          }
    }
    components.push_back(std::move(gamma));
  }
  return {std::move(source), std::move(target), std::move(components)};
}

}  // namespace

ChainMapR inclusion_chain_map(const ClassicalCode& a, const ClassicalCode& b,
                              const ClassicalCode& c, Component2D component, std::size_t q) {
  switch (component) {
    case Component2D::AB:
      return inclusion_into_ordered_product(a, b, c, q);
    case Component2D::AC: {
      ChainMapR incl = inclusion_into_ordered_product(a, c, b, q);
      ChainMapR iso = factor_permutation_iso({a, b, c}, {0, 2, 1});
      return compose(iso, incl);
    }
    case Component2D::BC: {
      ChainMapR incl = inclusion_into_ordered_product(b, c, a, q);
      ChainMapR iso = factor_permutation_iso({a, b, c}, {1, 2, 0});
      return compose(iso, incl);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<ChainMapR> hgp_slice_maps(const ClassicalCode& a, const ClassicalCode& b,
                                      const ClassicalCode& c) {
  if (!c.group.is_trivial())
    throw std::invalid_argument("slice maps are defined for the trivial group");
  BitMatrix hc = binary_rep(c.check);
  // Unit vectors completing the column space of Hc to F2^{r_C}: the
  // non-pivot coordinates of rref(Hc^T).
  RrefResult rr = rref(hc.transpose());
  std::vector<bool> pivot_row(c.checks(), false);
  for (std::size_t p : rr.pivots) pivot_row[p] = true;
  std::vector<ChainMapR> maps;
  for (std::size_t q = 0; q < c.checks(); ++q)
    if (!pivot_row[q]) maps.push_back(inclusion_chain_map(a, b, c, Component2D::AB, q + 1));
  if (maps.empty()) throw std::invalid_argument("coker(Hc) is trivial: no slice maps");
  return maps;
}

LogicalCnotMap induced_logical_map(const ChainMapR& map, const LogicalBasis& source_basis,
                                   const LogicalBasis& target_basis, const CssCode& target) {
  LogicalCnotMap out;
  out.gamma1_binary = binary_rep(map.gamma(1));

  const std::size_t ks = source_basis.z_reps.size();
  const std::size_t kt = target_basis.z_reps.size();

  // Stacked decomposition basis: [target z_reps | Hz^T columns].
  BitMatrix zcols(target.n, kt + target.hz.rows());
  for (std::size_t j = 0; j < kt; ++j)
    for (std::size_t r : target_basis.z_reps[j].set_bits()) zcols.set(r, j, true);
  for (std::size_t s = 0; s < target.hz.rows(); ++s)
    for (std::size_t r : target.hz.row(s).set_bits()) zcols.set(r, kt + s, true);
  LinearSolver solver(zcols);

  out.bar_gamma1 = BitMatrix(kt, ks);
  for (std::size_t j = 0; j < ks; ++j) {
    BitVector image = out.gamma1_binary.mul_vec(source_basis.z_reps[j]);
    std::optional<BitVector> coeffs = solver.solve(image);
    if (!coeffs)
      throw std::logic_error("gamma_1 image is not a cycle class: chain map is broken");
    for (std::size_t i = 0; i < kt; ++i) out.bar_gamma1.set(i, j, coeffs->get(i));
  }

  out.injective = rank(out.bar_gamma1) == ks;
  if (out.injective && ks <= kt) {
    // Complete the columns of bar_gamma1 to an invertible matrix M, then
    // T = M^{-1} maps bar_gamma1 to [I; 0].
    BitMatrix m(kt, kt);
    for (std::size_t j = 0; j < ks; ++j)
      for (std::size_t i = 0; i < kt; ++i) m.set(i, j, out.bar_gamma1.get(i, j));
    RowSpace span;
    for (std::size_t j = 0; j < ks; ++j) span.insert(out.bar_gamma1.transpose().row(j));
    std::size_t next = ks;
    for (std::size_t e = 0; e < kt && next < kt; ++e) {
      BitVector unit(kt);
      unit.set(e, true);
      if (span.insert(unit)) {
        m.set(e, next, true);
        ++next;
      }
    }
    RrefResult rr = rref(BitMatrix::hstack(m, BitMatrix::identity(kt)));
    if (rr.rank != kt) throw std::logic_error("basis completion failed");
    BitMatrix inverse(kt, kt);
    for (std::size_t r = 0; r < kt; ++r)
      for (std::size_t c2 = 0; c2 < kt; ++c2) inverse.set(r, c2, rr.reduced.get(r, kt + c2));
    out.transversal_basis = inverse;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cnot_schedule(const BitMatrix& gamma1_binary) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < gamma1_binary.rows(); ++r)
    for (std::size_t c : gamma1_binary.row(r).set_bits()) pairs.emplace_back(r, c);
  return pairs;
}

std::optional<IdealCertificate> ideal_membership(const GroupAlgebraElement& a,
                                                 const GroupAlgebraElement& b,
                                                 const GroupAlgebraElement& c) {
  const FiniteAbelianGroup& g = a.group();
  if (!(b.group() == g) || !(c.group() == g))
    throw std::invalid_argument("ideal membership requires a common group");
  const std::uint64_t l = g.size;
  BitMatrix system = BitMatrix::hstack(binary_rep(a), binary_rep(b));
  BitVector rhs(l);
  for (std::uint64_t s : c.support()) rhs.set(s, true);
  std::optional<BitVector> solution = solve_in_span(system, rhs);
  if (!solution) return std::nullopt;

  std::vector<std::uint64_t> u_support, v_support;
  for (std::uint64_t i = 0; i < l; ++i) {
    if (solution->get(i)) u_support.push_back(i);
    if (solution->get(l + i)) v_support.push_back(i);
  }
  IdealCertificate cert{GroupAlgebraElement(g, std::move(u_support)),
                        GroupAlgebraElement(g, std::move(v_support))};
  if (!(cert.u * a + cert.v * b == c))
    throw std::logic_error("ideal certificate failed ring re-verification");
  return cert;
}

}  // namespace dimjump
