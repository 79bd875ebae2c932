#include "dimjump/f2_linalg.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dimjump {

BitVector BitVector::from_indices(std::size_t length, std::initializer_list<std::size_t> ones) {
  BitVector v(length);
  for (std::size_t i : ones) v.set(i, true);
  return v;
}

void BitVector::xor_with(const BitVector& other) {
  if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::vector<std::size_t> BitVector::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(wi * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
  BitVector out = a;
  out.xor_with(b);
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t w = 0; w < wpr_; ++w) v.words()[w] = payload_[r * wpr_ + w];
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t w = 0; w < wpr_; ++w) payload_[r * wpr_ + w] = v.words()[w];
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  std::uint64_t* d = row_words(dst);
  const std::uint64_t* s = row_words(src);
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* ra = row_words(a);
  std::uint64_t* rb = row_words(b);
  for (std::size_t w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t n = 0;
  const std::uint64_t* p = row_words(r);
  for (std::size_t w = 0; w < wpr_; ++w) n += std::popcount(p[w]);
  return n;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += get(r, c);
  return n;
}

std::size_t BitMatrix::max_row_weight() const {
  std::size_t best = 0;
  for (std::size_t r = 0; r < rows_; ++r) best = std::max(best, row_weight(r));
  return best;
}

std::size_t BitMatrix::max_col_weight() const {
  std::vector<std::size_t> counts(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : row(r).set_bits()) ++counts[c];
  std::size_t best = 0;
  for (std::size_t c : counts) best = std::max(best, c);
  return best;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* p = row_words(r);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
      std::uint64_t w = p[wi];
      while (w) {
        std::size_t c = wi * 64 + std::countr_zero(w);
        t.set(c, r, true);
        w &= w - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row_words(r);
    const std::uint64_t* src = row_words(r);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
      std::uint64_t w = src[wi];
      while (w) {
        std::size_t k = wi * 64 + std::countr_zero(w);
        const std::uint64_t* rk = other.row_words(k);
        for (std::size_t j = 0; j < other.wpr_; ++j) dst[j] ^= rk[j];
        w &= w - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  BitMatrix out = *this;
  for (std::size_t i = 0; i < payload_.size(); ++i) out.payload_[i] ^= other.payload_[i];
  return out;
}

BitVector BitMatrix::mul_vec(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* p = row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= p[w] & v.words()[w];
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (std::uint64_t w : payload_)
    if (w) return false;
  return true;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  BitMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
  return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& left, const BitMatrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
  BitMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c : left.row(r).set_bits()) out.set(r, c, true);
    for (std::size_t c : right.row(r).set_bits()) out.set(r, left.cols() + c, true);
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) os << row(r).to_string() << '\n';
  return os.str();
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  res.reduced = m;
  BitMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && a.get(i, c)) a.xor_row_into(r, i);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
      if (rr.reduced.get(pr, free)) v.set(rr.pivots[pr], true);
    if (!m.mul_vec(v).is_zero()) throw std::logic_error("kernel vector failed re-verification");
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolver::LinearSolver(const BitMatrix& a) : a_(a) {
  // Eliminate [A | I] so that transform_ * A = reduced_.
  BitMatrix aug = BitMatrix::hstack(a, BitMatrix::identity(a.rows()));
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && !aug.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    aug.swap_rows(r, pivot);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && aug.get(i, c)) aug.xor_row_into(r, i);
    pivots_.push_back(c);
    ++r;
  }
  reduced_ = BitMatrix(a.rows(), a.cols());
  transform_ = BitMatrix(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t c : aug.row(i).set_bits()) {
      if (c < a.cols())
        reduced_.set(i, c, true);
      else
        transform_.set(i, c - a.cols(), true);
    }
  }
}

std::optional<BitVector> LinearSolver::solve(const BitVector& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("solve dimension mismatch");
  BitVector y = transform_.mul_vec(b);
  BitVector x(a_.cols());
  for (std::size_t r = 0; r < pivots_.size(); ++r) x.set(pivots_[r], y.get(r));
  if (a_.mul_vec(x) == b) return x;
  return std::nullopt;
}

std::optional<BitVector> solve_in_span(const BitMatrix& a, const BitVector& b) {
  return LinearSolver(a).solve(b);
}

RowSpace::RowSpace(const BitMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
}

RowSpace::RowSpace(const std::vector<BitVector>& rows) {
  for (const BitVector& v : rows) insert(v);
}

BitVector RowSpace::reduce(BitVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(leading_bits_[i])) v.xor_with(basis_[i]);
  return v;
}

bool RowSpace::insert(BitVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  std::size_t lead = v.set_bits().front();
  // keep echelon order by leading bit
  std::size_t pos = 0;
  while (pos < leading_bits_.size() && leading_bits_[pos] < lead) ++pos;
  basis_.insert(basis_.begin() + pos, v);
  leading_bits_.insert(leading_bits_.begin() + pos, lead);
  // back-substitute to keep reduced form
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (i != pos && basis_[i].get(lead)) basis_[i].xor_with(basis_[pos]);
  return true;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    std::vector<std::size_t> acols = a.row(ar).set_bits();
    if (acols.empty()) continue;
    for (std::size_t br = 0; br < b.rows(); ++br) {
      std::vector<std::size_t> bcols = b.row(br).set_bits();
      std::size_t r = ar * b.rows() + br;
      for (std::size_t ac : acols)
        for (std::size_t bc : bcols) out.set(r, ac * b.cols() + bc, true);
    }
  }
  return out;
}

std::vector<BitVector> quotient_reps(const std::vector<BitVector>& z_basis,
                                     const std::vector<BitVector>& b_basis) {
  RowSpace z_space(z_basis);
  for (const BitVector& b : b_basis)
    if (!z_space.contains(b))
      throw std::invalid_argument("quotient_reps: B is not contained in span(Z)");
  RowSpace accum(b_basis);
  std::vector<BitVector> reps;
  for (const BitVector& z : z_basis) {
    BitVector reduced = accum.reduce(z);
    if (reduced.is_zero()) continue;
    accum.insert(reduced);
    reps.push_back(std::move(reduced));
  }
  return reps;
}

}  // namespace dimjump
