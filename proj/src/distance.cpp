#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dimjump/codes.hpp"

namespace dimjump {

std::string DistanceResult::to_string() const {
  std::ostringstream os;
  if (undefined) return "undefined (k = 0)";
  if (exact) {
    os << "d = " << distance;
  } else {
    os << "d >= " << lower_bound;
    if (upper_bound) os << ", d <= " << *upper_bound;
  }
  return os.str();
}

std::size_t auto_weight_cap(std::size_t n, std::uint64_t budget) {
  std::uint64_t total = 0;
  std::size_t w = 0;
  long double binom = 1.0L;  // C(n, 0)
  while (w < n) {
    binom = binom * static_cast<long double>(n - w) / static_cast<long double>(w + 1);
    if (binom > static_cast<long double>(budget)) break;
    std::uint64_t next = total + static_cast<std::uint64_t>(binom);
    if (next > budget) break;
    total = next;
    ++w;
  }
  return w;
}

namespace {

/// Depth-first enumeration of supports of exactly `weight`, carrying the
/// partial syndrome. Columns are processed in ascending index order, so the
/// first witness found is lexicographically least.
class WeightEnumerator {
 public:
  WeightEnumerator(const std::vector<BitVector>& columns, const RowSpace& stabilizers,
                   std::size_t n, std::size_t max_col_weight)
      : columns_(columns), stabilizers_(stabilizers), n_(n), max_col_weight_(max_col_weight) {}

  std::optional<std::vector<std::size_t>> find(std::size_t weight) {
    chosen_.clear();
    syndrome_ = BitVector(columns_.front().size());
    weight_ = weight;
    return descend(0, weight) ? std::optional(chosen_) : std::nullopt;
  }

 private:
  bool descend(std::size_t first, std::size_t remaining) {
    if (remaining == 0) {
      if (!syndrome_.is_zero()) return false;
      BitVector v(n_);
      for (std::size_t c : chosen_) v.set(c, true);
      return !stabilizers_.contains(v);
    }
    // Each remaining column can cancel at most max_col_weight_ syndrome bits.
    if (syndrome_.popcount() > remaining * max_col_weight_) return false;
    for (std::size_t c = first; c + remaining <= n_; ++c) {
      chosen_.push_back(c);
      syndrome_.xor_with(columns_[c]);
      if (descend(c + 1, remaining - 1)) return true;
      syndrome_.xor_with(columns_[c]);
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<BitVector>& columns_;
  const RowSpace& stabilizers_;
  std::size_t n_;
  std::size_t max_col_weight_;
  std::vector<std::size_t> chosen_;
  BitVector syndrome_;
  std::size_t weight_ = 0;
};

}  // namespace

DistanceResult distance_search(const CssCode& code, PauliBasis basis,
                               const DistanceOptions& opts) {
  const BitMatrix& opposite = basis == PauliBasis::Z ? code.hx : code.hz;
  const BitMatrix& same = basis == PauliBasis::Z ? code.hz : code.hx;

  DistanceResult res;
  if (code.k() == 0) {
    res.undefined = true;
    res.lower_bound = 1;
    return res;
  }

  RowSpace stabilizers(same);
  auto is_logical = [&](const BitVector& v) {
    return !v.is_zero() && opposite.mul_vec(v).is_zero() && !stabilizers.contains(v);
  };

  // Hints provide upper bounds; each is verified before being accepted.
  for (const BitVector& hint : opts.hints) {
    if (hint.size() != code.n) throw std::invalid_argument("hint length mismatch");
    if (!is_logical(hint)) continue;
    std::size_t w = hint.popcount();
    if (!res.upper_bound || w < *res.upper_bound) {
      res.upper_bound = w;
      res.witness = hint;
    }
  }

  std::size_t cap = opts.weight_cap ? opts.weight_cap : auto_weight_cap(code.n, opts.candidate_budget);
  if (res.upper_bound) cap = std::min(cap, *res.upper_bound);

  BitMatrix cols_m = opposite.transpose();
  std::vector<BitVector> columns;
  columns.reserve(code.n);
  for (std::size_t c = 0; c < code.n; ++c) columns.push_back(cols_m.row(c));

  WeightEnumerator enumerator(columns, stabilizers, code.n, opposite.max_col_weight());
  for (std::size_t w = 1; w <= cap; ++w) {
    if (auto support = enumerator.find(w)) {
      res.exact = true;
      res.distance = w;
      res.lower_bound = w;
      BitVector v(code.n);
      for (std::size_t c : *support) v.set(c, true);
      if (!is_logical(v)) throw std::logic_error("distance witness failed re-verification");
      res.witness = v;
      res.upper_bound = w;
      return res;
    }
    res.lower_bound = w + 1;
  }

  if (res.upper_bound && *res.upper_bound <= cap) {
    // The enumeration covered every weight up to the hint: it is exact.
    res.exact = true;
    res.distance = *res.upper_bound;
    return res;
  }
  return res;
}

}  // namespace dimjump
