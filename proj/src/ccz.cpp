#include "dimjump/ccz.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dimjump {

void CczTensor::canonicalize() {
  for (const auto& t : triples)
    for (std::size_t s = 0; s < 3; ++s)
      if (t[s] >= block_sizes[s]) throw std::invalid_argument("CCZ triple index out of range");
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

std::size_t CczTensor::depth() const {
  std::array<std::vector<std::size_t>, 3> counts;
  for (std::size_t s = 0; s < 3; ++s) counts[s].assign(block_sizes[s], 0);
  for (const auto& t : triples)
    for (std::size_t s = 0; s < 3; ++s) ++counts[s][t[s]];
  std::size_t best = 0;
  for (const auto& c : counts)
    for (std::size_t v : c) best = std::max(best, v);
  return best;
}

bool cup_form(const CczTensor& delta, const BitVector& u, const BitVector& v,
              const BitVector& w) {
  bool acc = false;
  for (const auto& t : delta.triples)
    acc ^= u.get(t[0]) && v.get(t[1]) && w.get(t[2]);
  return acc;
}

std::string CupValidityReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "form does not vanish: stabilizer " << stabilizer << " in slot " << slot
     << " against cocycle pair (" << cocycle_a << ", " << cocycle_b << ")";
  return os.str();
}

CupValidityReport verify_cup_validity(const CczTensor& delta, const CssCode& c1,
                                      const CssCode& c2, const CssCode& c3) {
  const CssCode* codes[3] = {&c1, &c2, &c3};
  for (std::size_t s = 0; s < 3; ++s)
    if (delta.block_sizes[s] != codes[s]->n)
      throw std::invalid_argument("CCZ block size disagrees with code size");

  std::array<std::vector<BitVector>, 3> stabs, cocycles;
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t r = 0; r < codes[s]->hx.rows(); ++r) stabs[s].push_back(codes[s]->hx.row(r));
    cocycles[s] = kernel_basis(codes[s]->hz);
  }

  for (std::size_t slot = 0; slot < 3; ++slot) {
    std::size_t oa = (slot + 1) % 3, ob = (slot + 2) % 3;
    for (std::size_t si = 0; si < stabs[slot].size(); ++si)
      for (std::size_t ai = 0; ai < cocycles[oa].size(); ++ai)
        for (std::size_t bi = 0; bi < cocycles[ob].size(); ++bi) {
          const BitVector* args[3];
          args[slot] = &stabs[slot][si];
          args[oa] = &cocycles[oa][ai];
          args[ob] = &cocycles[ob][bi];
          if (cup_form(delta, *args[0], *args[1], *args[2]))
            return {false, slot, si, ai, bi};
        }
  }
  return {};
}

InducedCczResult induced_logical_tensor(const CczTensor& delta, const LogicalBasis& b1,
                                        const LogicalBasis& b2, const LogicalBasis& b3) {
  InducedCczResult out;
  out.logical.dims = {b1.x_reps.size(), b2.x_reps.size(), b3.x_reps.size()};
  for (std::uint32_t i = 0; i < b1.x_reps.size(); ++i)
    for (std::uint32_t j = 0; j < b2.x_reps.size(); ++j)
      for (std::uint32_t k = 0; k < b3.x_reps.size(); ++k)
        if (cup_form(delta, b1.x_reps[i], b2.x_reps[j], b3.x_reps[k]))
          out.logical.entries.push_back({i, j, k});
  out.nontrivial = !out.logical.entries.empty();
  out.depth = delta.depth();
  return out;
}

CczTensor EquivariantCcz::expand() const {
  const std::uint64_t l = group.size;
  CczTensor delta;
  delta.block_sizes = {3 * l, 3 * l, 3 * l};
  for (const auto& [sectors, offsets] : offset_sets)
    for (const auto& off : offsets)
      for (std::uint64_t g = 0; g < l; ++g)
        delta.triples.push_back(
            {static_cast<std::uint32_t>(sectors[0] * l + g),
             static_cast<std::uint32_t>(sectors[1] * l + group.add(g, off[0])),
             static_cast<std::uint32_t>(sectors[2] * l + group.add(g, off[1]))});
  delta.canonicalize();
  return delta;
}

namespace {

struct OrbitVariable {
  std::array<std::size_t, 3> sectors;
  std::array<std::uint64_t, 2> offsets;  // (h2, h3)
};

// f contribution of one orbit variable: parity over g of
// u[(s1, g)] v[(s2, g h2)] w[(s3, g h3)].
bool orbit_form(const OrbitVariable& var, const FiniteAbelianGroup& group, const BitVector& u,
                const BitVector& v, const BitVector& w) {
  const std::uint64_t l = group.size;
  bool acc = false;
  for (std::uint64_t g = 0; g < l; ++g)
    acc ^= u.get(var.sectors[0] * l + g) &&
           v.get(var.sectors[1] * l + group.add(g, var.offsets[0])) &&
           w.get(var.sectors[2] * l + group.add(g, var.offsets[1]));
  return acc;
}

std::vector<std::array<std::size_t, 3>> sector_triples(bool widen) {
  std::vector<std::array<std::size_t, 3>> out;
  if (widen) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) out.push_back({i, j, k});
    return out;
  }
  out = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return out;
}

}  // namespace

std::optional<CczSearchResult> equivariant_solve(const LpCode& code, const LogicalBasis& basis,
                                                 const CczSearchOptions& opts) {
  const CssCode& css = code.css;
  if (css.sectors.size() != 3 || css.provenance != "bt")
    throw std::invalid_argument("equivariant search expects a tricycle construction");
  const FiniteAbelianGroup& group = code.complex.group();
  const std::uint64_t l = group.size;

  if (css.k() == 0) return std::nullopt;

  for (bool widen : {false, true}) {
    if (widen && !opts.widen_to_all_sector_triples) break;

    std::vector<OrbitVariable> vars;
    for (const auto& sectors : sector_triples(widen))
      for (std::uint64_t h2 = 0; h2 < l; ++h2)
        for (std::uint64_t h3 = 0; h3 < l; ++h3) vars.push_back({sectors, {h2, h3}});

    // Validity constraints: one row per (slot, stabilizer, cocycle pair).
    std::vector<BitVector> stabs;
    for (std::size_t r = 0; r < css.hx.rows(); ++r) stabs.push_back(css.hx.row(r));
    std::vector<BitVector> cocycles = kernel_basis(css.hz);

    std::vector<BitVector> rows;
    for (std::size_t slot = 0; slot < 3; ++slot)
      for (const BitVector& s : stabs)
        for (const BitVector& va : cocycles)
          for (const BitVector& vb : cocycles) {
            BitVector row(vars.size());
            const BitVector* args[3];
            args[slot] = &s;
            args[(slot + 1) % 3] = &va;
            args[(slot + 2) % 3] = &vb;
            for (std::size_t t = 0; t < vars.size(); ++t)
              if (orbit_form(vars[t], group, *args[0], *args[1], *args[2])) row.set(t, true);
            rows.push_back(std::move(row));
          }

    BitMatrix system = BitMatrix::from_rows(rows, vars.size());
    std::vector<BitVector> nullspace = kernel_basis(system);
    if (nullspace.empty()) continue;

    // Nontriviality functionals: per variable, the induced logical tensor.
    const std::size_t k = basis.x_reps.size();
    const std::size_t tensor_bits = k * k * k;
    std::vector<BitVector> logical_tables(vars.size(), BitVector(tensor_bits));
    for (std::size_t t = 0; t < vars.size(); ++t)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t m = 0; m < k; ++m)
            if (orbit_form(vars[t], group, basis.x_reps[i], basis.x_reps[j], basis.x_reps[m]))
              logical_tables[t].set((i * k + j) * k + m, true);

    auto depth_of = [&](const BitVector& theta) {
      // Every selected orbit adds one triple through each qubit of the
      // sector it touches, independent of the group element.
      std::size_t counts[3][3] = {};
      for (std::size_t t : theta.set_bits())
        for (std::size_t s = 0; s < 3; ++s) ++counts[s][vars[t].sectors[s]];
      std::size_t best = 0;
      for (auto& row : counts)
        for (std::size_t v : row) best = std::max(best, v);
      return best;
    };
    auto nontrivial = [&](const BitVector& theta) {
      BitVector acc(tensor_bits);
      for (std::size_t t : theta.set_bits()) acc.xor_with(logical_tables[t]);
      return !acc.is_zero();
    };

    // Enumerate nullspace combinations by increasing support size, keeping
    // the best depth found; stop early at the depth target.
    const std::size_t dim = nullspace.size();
    std::optional<BitVector> best_theta;
    std::size_t best_depth = SIZE_MAX;
    std::uint64_t nodes = 0;

    if (dim <= 24 && (std::uint64_t{1} << dim) <= opts.node_budget) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
        BitVector theta(vars.size());
        for (std::size_t i = 0; i < dim; ++i)
          if ((mask >> i) & 1) theta.xor_with(nullspace[i]);
        std::size_t d = depth_of(theta);
        if (d >= best_depth) continue;
        if (!nontrivial(theta)) continue;
        best_theta = theta;
        best_depth = d;
        if (best_depth <= opts.depth_target) break;
      }
    } else {
      // Budgeted search: single basis vectors, then pairs, then random
      // combinations seeded deterministically.
      auto consider = [&](const BitVector& theta) {
        std::size_t d = depth_of(theta);
        if (d < best_depth && nontrivial(theta)) {
          best_theta = theta;
          best_depth = d;
        }
      };
      for (std::size_t i = 0; i < dim && nodes < opts.node_budget; ++i, ++nodes)
        consider(nullspace[i]);
      for (std::size_t i = 0; i < dim && best_depth > opts.depth_target; ++i)
        for (std::size_t j = i + 1; j < dim && nodes < opts.node_budget; ++j, ++nodes) {
          BitVector theta = nullspace[i];
          theta.xor_with(nullspace[j]);
          consider(theta);
        }
      std::mt19937_64 rng(0x5eed5eedULL);
      while (nodes < opts.node_budget && best_depth > opts.depth_target) {
        BitVector theta(vars.size());
        for (std::size_t i = 0; i < dim; ++i)
          if (rng() & 1) theta.xor_with(nullspace[i]);
        consider(theta);
        ++nodes;
      }
    }

    if (!best_theta) continue;  // widen the ansatz if allowed

    CczSearchResult result;
    result.form.group = group;
    for (std::size_t t : best_theta->set_bits())
      result.form.offset_sets[vars[t].sectors].push_back(vars[t].offsets);
    result.delta = result.form.expand();
    result.depth = result.delta.depth();
    return result;
  }
  return std::nullopt;
}

std::vector<CorrelatedZError> propagated_error_channel(const CczTensor& delta, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of range");
  std::vector<CorrelatedZError> channels;
  for (std::size_t block = 0; block < 3; ++block) {
    for (std::size_t q = 0; q < delta.block_sizes[block]; ++q) {
      CorrelatedZError err;
      err.probability = p;
      std::vector<std::pair<std::size_t, std::size_t>> partners;
      for (const auto& t : delta.triples) {
        if (t[block] != q) continue;
        partners.emplace_back((block + 1) % 3, t[(block + 1) % 3]);
        partners.emplace_back((block + 2) % 3, t[(block + 2) % 3]);
      }
      partners.emplace_back(block, q);
      std::sort(partners.begin(), partners.end());
      partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
      err.support = std::move(partners);
      channels.push_back(std::move(err));
    }
  }
  return channels;
}

void write_triples(std::ostream& os, const CczTensor& delta) {
  for (const auto& t : delta.triples) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

CczTensor read_triples(std::istream& is, std::array<std::size_t, 3> block_sizes) {
  CczTensor delta;
  delta.block_sizes = block_sizes;
  std::uint32_t i, j, k;
  while (is >> i >> j >> k) delta.triples.push_back({i, j, k});
  delta.canonicalize();
  return delta;
}

}  // namespace dimjump
