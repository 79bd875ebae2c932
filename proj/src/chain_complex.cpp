#include "dimjump/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace dimjump {

std::string ValidationReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "boundary product nonzero at degree " << degree << ", entry (" << row << ", " << col
     << ")";
  return os.str();
}

ChainComplexR::ChainComplexR(FiniteAbelianGroup group, std::vector<std::size_t> module_dims,
                             std::vector<RMatrix> boundaries)
    : group_(std::move(group)), dims_(std::move(module_dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw std::invalid_argument("complex needs at least one module");
  if (boundaries_.size() + 1 != dims_.size())
    throw std::invalid_argument("boundary count must be length of complex");
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    if (!(boundaries_[i].group() == group_))
      throw std::invalid_argument("boundary group mismatch");
    if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1])
      throw std::invalid_argument("boundary dimension mismatch at degree " + std::to_string(i + 1));
  }
}

ValidationReport ChainComplexR::validate() const {
  for (std::size_t i = 2; i <= length(); ++i) {
    RMatrix prod = boundary(i - 1) * boundary(i);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (!prod.at(r, c).is_zero()) return {false, i, r, c};
  }
  return {};
}

namespace {

// Kronecker product over R with row-major cell flattening (A slow).
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

}  // namespace

ChainComplexR tensor_product(const ChainComplexR& a, const ChainComplexR& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("tensor product requires matching groups");
  const std::size_t da = a.length(), db = b.length(), d = da + db;

  std::vector<std::vector<ProductSector>> sectors(d + 1);
  std::vector<std::size_t> dims(d + 1, 0);
  for (std::size_t n = 0; n <= d; ++n) {
    std::size_t offset = 0;
    for (std::size_t i = std::min(n, da) + 1; i-- > 0;) {
      std::size_t j = n - i;
      if (j > db) continue;
      std::size_t dim = a.module_dim(i) * b.module_dim(j);
      sectors[n].push_back({i, j, dim, offset});
      offset += dim;
    }
    dims[n] = offset;
  }

  std::vector<RMatrix> boundaries;
  for (std::size_t n = 1; n <= d; ++n) {
    RMatrix m(a.group(), dims[n - 1], dims[n]);
    for (const ProductSector& src : sectors[n]) {
      // dA (x) I : (i, j) -> (i - 1, j)
      if (src.deg_a >= 1) {
        for (const ProductSector& dst : sectors[n - 1]) {
          if (dst.deg_a != src.deg_a - 1 || dst.deg_b != src.deg_b) continue;
          RMatrix block = r_kron(a.boundary(src.deg_a),
                                 RMatrix::identity(a.group(), b.module_dim(src.deg_b)));
          for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
              if (!block.at(r, c).is_zero()) m.at(dst.offset + r, src.offset + c) = block.at(r, c);
        }
      }
      // I (x) dB : (i, j) -> (i, j - 1); no sign in characteristic 2
      if (src.deg_b >= 1) {
        for (const ProductSector& dst : sectors[n - 1]) {
          if (dst.deg_a != src.deg_a || dst.deg_b != src.deg_b - 1) continue;
          RMatrix block = r_kron(RMatrix::identity(a.group(), a.module_dim(src.deg_a)),
                                 b.boundary(src.deg_b));
          for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
              if (!block.at(r, c).is_zero()) m.at(dst.offset + r, src.offset + c) = block.at(r, c);
        }
      }
    }
    boundaries.push_back(std::move(m));
  }

  ChainComplexR out(a.group(), dims, std::move(boundaries));
  out.set_sectors(std::move(sectors));
  ValidationReport report = out.validate();
  if (!report.ok) throw std::logic_error("tensor product violated d d = 0: " + report.to_string());
  return out;
}

ChainComplexF2::ChainComplexF2(std::vector<std::size_t> space_dims,
                               std::vector<BitMatrix> boundaries)
    : dims_(std::move(space_dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw std::invalid_argument("complex needs at least one space");
  if (boundaries_.size() + 1 != dims_.size())
    throw std::invalid_argument("boundary count must be length of complex");
  for (std::size_t i = 0; i < boundaries_.size(); ++i)
    if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1])
      throw std::invalid_argument("boundary dimension mismatch at degree " + std::to_string(i + 1));
}

ValidationReport ChainComplexF2::validate() const {
  for (std::size_t i = 2; i <= length(); ++i) {
    BitMatrix prod = boundary(i - 1) * boundary(i);
    if (prod.is_zero()) continue;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (prod.get(r, c)) return {false, i, r, c};
  }
  return {};
}

ChainComplexF2 binary_lift(const ChainComplexR& c) {
  ValidationReport report = c.validate();
  if (!report.ok) throw std::invalid_argument("cannot lift an invalid complex: " + report.to_string());
  const std::uint64_t l = c.group().size;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= c.length(); ++i) dims.push_back(c.module_dim(i) * l);
  std::vector<BitMatrix> boundaries;
  for (std::size_t i = 1; i <= c.length(); ++i) boundaries.push_back(binary_rep(c.boundary(i)));
  ChainComplexF2 out(std::move(dims), std::move(boundaries));
  ValidationReport binary_report = out.validate();
  if (!binary_report.ok)
    throw std::logic_error("binary lift violated d d = 0: " + binary_report.to_string());
  return out;
}

HomologyData homology(const ChainComplexF2& c, std::size_t degree) {
  if (degree > c.length()) throw std::invalid_argument("degree out of range");
  HomologyData h;
  h.degree = degree;
  h.cycle_matrix = degree >= 1 ? c.boundary(degree) : BitMatrix(0, c.space_dim(0));
  std::vector<BitVector> cycles = kernel_basis(h.cycle_matrix);

  std::vector<BitVector> boundary_cols;
  if (degree + 1 <= c.length()) {
    BitMatrix bt = c.boundary(degree + 1).transpose();
    for (std::size_t r = 0; r < bt.rows(); ++r) boundary_cols.push_back(bt.row(r));
  }
  h.boundary_space = RowSpace(boundary_cols);
  h.representatives = quotient_reps(cycles, h.boundary_space.basis());
  h.dimension = h.representatives.size();
  return h;
}

}  // namespace dimjump
