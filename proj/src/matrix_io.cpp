#include "dimjump/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dimjump {

void write_matrix_market(std::ostream& os, const BitMatrix& m) {
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) nnz += m.row_weight(r);
  os << "%%MatrixMarket matrix coordinate pattern general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c : m.row(r).set_bits()) os << (r + 1) << ' ' << (c + 1) << '\n';
}

std::string matrix_market_string(const BitMatrix& m) {
  std::ostringstream os;
  write_matrix_market(os, m);
  return os.str();
}

BitMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw std::invalid_argument("not a MatrixMarket file");
  do {
    if (!std::getline(is, line)) throw std::invalid_argument("missing size line");
  } while (!line.empty() && line[0] == '%');
  std::istringstream header(line);
  std::size_t rows, cols, nnz;
  if (!(header >> rows >> cols >> nnz)) throw std::invalid_argument("bad size line");
  BitMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r, c;
    if (!(is >> r >> c)) throw std::invalid_argument("truncated entry list");
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw std::invalid_argument("entry out of range");
    m.set(r - 1, c - 1, true);
  }
  return m;
}

void write_alist(std::ostream& os, const BitMatrix& m) {
  const std::size_t n = m.cols(), r = m.rows();
  std::vector<std::vector<std::size_t>> col_lists(n), row_lists(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c : m.row(i).set_bits()) {
      col_lists[c].push_back(i + 1);
      row_lists[i].push_back(c + 1);
    }
  std::size_t max_col = 0, max_row = 0;
  for (const auto& l : col_lists) max_col = std::max(max_col, l.size());
  for (const auto& l : row_lists) max_row = std::max(max_row, l.size());
  os << n << ' ' << r << '\n';
  os << max_col << ' ' << max_row << '\n';
  for (std::size_t c = 0; c < n; ++c) os << col_lists[c].size() << (c + 1 < n ? ' ' : '\n');
  for (std::size_t i = 0; i < r; ++i) os << row_lists[i].size() << (i + 1 < r ? ' ' : '\n');
  auto emit_padded = [&](const std::vector<std::size_t>& list, std::size_t width) {
    if (width == 0) {
      os << '\n';
      return;
    }
    for (std::size_t k = 0; k < width; ++k) os << (k < list.size() ? list[k] : 0) << (k + 1 < width ? ' ' : '\n');
  };
  for (std::size_t c = 0; c < n; ++c) emit_padded(col_lists[c], max_col);
  for (std::size_t i = 0; i < r; ++i) emit_padded(row_lists[i], max_row);
}

std::string alist_string(const BitMatrix& m) {
  std::ostringstream os;
  write_alist(os, m);
  return os.str();
}

BitMatrix read_alist(std::istream& is) {
  std::size_t n, r, max_col, max_row;
  if (!(is >> n >> r >> max_col >> max_row)) throw std::invalid_argument("bad alist header");
  std::vector<std::size_t> col_w(n), row_w(r);
  for (auto& w : col_w) is >> w;
  for (auto& w : row_w) is >> w;
  BitMatrix m(r, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < max_col; ++k) {
      std::size_t idx;
      if (!(is >> idx)) throw std::invalid_argument("truncated alist column list");
      if (idx) m.set(idx - 1, c, true);
    }
  }
  // row lists are redundant; consume and cross-check weights
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t seen = 0;
    for (std::size_t k = 0; k < max_row; ++k) {
      std::size_t idx;
      if (!(is >> idx)) throw std::invalid_argument("truncated alist row list");
      if (idx) ++seen;
    }
    if (seen != row_w[i]) throw std::invalid_argument("alist row weight mismatch");
  }
  return m;
}

}  // namespace dimjump
