#include "dimjump/group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dimjump {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factor_orders)
    : orders(std::move(factor_orders)) {
  if (orders.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  size = 1;
  for (std::uint32_t o : orders) {
    if (o < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
    size *= o;
  }
}

std::uint64_t FiniteAbelianGroup::index_of(std::span<const std::uint32_t> exps) const {
  if (exps.size() != orders.size()) throw std::invalid_argument("exponent arity mismatch");
  std::uint64_t idx = 0;
  for (std::size_t f = 0; f < orders.size(); ++f) {
    std::uint32_t e = exps[f] % orders[f];
    idx = idx * orders[f] + e;
  }
  return idx;
}

std::vector<std::uint32_t> FiniteAbelianGroup::exponents_of(std::uint64_t index) const {
  std::vector<std::uint32_t> exps(orders.size());
  for (std::size_t f = orders.size(); f-- > 0;) {
    exps[f] = static_cast<std::uint32_t>(index % orders[f]);
    index /= orders[f];
  }
  return exps;
}

std::uint64_t FiniteAbelianGroup::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t idx = 0;
  std::uint64_t place = 1;
  for (std::size_t f = orders.size(); f-- > 0;) {
    std::uint64_t ea = a % orders[f], eb = b % orders[f];
    a /= orders[f];
    b /= orders[f];
    idx += ((ea + eb) % orders[f]) * place;
    place *= orders[f];
  }
  return idx;
}

std::uint64_t FiniteAbelianGroup::negate(std::uint64_t a) const {
  std::uint64_t idx = 0;
  std::uint64_t place = 1;
  for (std::size_t f = orders.size(); f-- > 0;) {
    std::uint64_t ea = a % orders[f];
    a /= orders[f];
    idx += ((orders[f] - ea) % orders[f]) * place;
    place *= orders[f];
  }
  return idx;
}

GroupAlgebraElement::GroupAlgebraElement(FiniteAbelianGroup group,
                                         std::vector<std::uint64_t> sorted_support)
    : group_(std::move(group)), support_(std::move(sorted_support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::invalid_argument("duplicate monomial in support");
  for (std::uint64_t s : support_)
    if (s >= group_.size) throw std::invalid_argument("support index out of range");
}

GroupAlgebraElement GroupAlgebraElement::one(const FiniteAbelianGroup& g) {
  return GroupAlgebraElement(g, {0});
}

GroupAlgebraElement GroupAlgebraElement::monomial(const FiniteAbelianGroup& g,
                                                  std::span<const std::uint32_t> exps) {
  return GroupAlgebraElement(g, {g.index_of(exps)});
}

namespace {

std::vector<std::uint64_t> cancel_mod2(std::vector<std::uint64_t> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("group mismatch in addition");
  std::vector<std::uint64_t> terms = support_;
  terms.insert(terms.end(), other.support_.begin(), other.support_.end());
  return GroupAlgebraElement(group_, cancel_mod2(std::move(terms)));
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("group mismatch in multiplication");
  std::vector<std::uint64_t> terms;
  terms.reserve(support_.size() * other.support_.size());
  for (std::uint64_t a : support_)
    for (std::uint64_t b : other.support_) terms.push_back(group_.add(a, b));
  return GroupAlgebraElement(group_, cancel_mod2(std::move(terms)));
}

GroupAlgebraElement antipode(const GroupAlgebraElement& a) {
  std::vector<std::uint64_t> terms;
  terms.reserve(a.support().size());
  for (std::uint64_t s : a.support()) terms.push_back(a.group().negate(s));
  std::sort(terms.begin(), terms.end());
  return GroupAlgebraElement(a.group(), std::move(terms));
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const FiniteAbelianGroup& group;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  std::uint64_t parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoull(std::string(text.substr(start, pos - start)));
  }

  // Returns the factor index for a variable name, consuming it.
  std::size_t parse_variable() {
    skip_ws();
    char c = text[pos];
    if (group.factors() <= 3) {
      std::size_t f = (c == 'x') ? 0 : (c == 'y') ? 1 : (c == 'z') ? 2 : 3;
      if (f >= group.factors())
        fail(std::string("unknown variable '") + c + "' for this group");
      ++pos;
      return f;
    }
    if (c != 'x') fail("expected variable of the form x<k>");
    ++pos;
    std::uint64_t k = parse_number();
    if (k < 1 || k > group.factors()) fail("variable index out of range");
    return static_cast<std::size_t>(k - 1);
  }

  // monomial := "0" | "1" | var[^exp] (['*'] var[^exp])*
  // Returns true and sets idx unless the monomial is the zero constant.
  bool parse_monomial(std::uint64_t& idx) {
    skip_ws();
    if (pos >= text.size()) fail("expected a monomial");
    std::vector<std::uint32_t> exps(group.factors(), 0);
    bool saw_factor = false;
    bool zero = false;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t n = parse_number();
        if (n == 0)
          zero = true;
        else if (n != 1)
          fail("coefficients other than 0/1 are not valid over F2");
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t f = parse_variable();
        std::uint64_t e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = parse_number();
        }
        exps[f] = static_cast<std::uint32_t>((exps[f] + e) % group.orders[f]);
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      // juxtaposition continues a monomial only for single-letter variables
      if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])) &&
          group.factors() <= 3)
        continue;
      break;
    }
    if (!saw_factor) fail("expected a monomial");
    if (zero) return false;
    idx = group.index_of(exps);
    return true;
  }

  GroupAlgebraElement parse() {
    std::vector<std::uint64_t> terms;
    for (;;) {
      std::uint64_t idx = 0;
      if (parse_monomial(idx)) terms.push_back(idx);
      if (eof()) break;
      if (peek() != '+') fail("expected '+'");
      ++pos;
    }
    return GroupAlgebraElement(group, cancel_mod2(std::move(terms)));
  }
};

std::string variable_name(const FiniteAbelianGroup& g, std::size_t factor) {
  if (g.factors() <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[factor];
  }
  return "x" + std::to_string(factor + 1);
}

}  // namespace

GroupAlgebraElement parse_element(std::string_view text, const FiniteAbelianGroup& group) {
  Parser p{text, 0, group};
  if (p.eof()) p.fail("empty polynomial");
  return p.parse();
}

std::string render(const GroupAlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (std::uint64_t idx : a.support()) {
    if (!first_term) os << " + ";
    first_term = false;
    std::vector<std::uint32_t> exps = a.group().exponents_of(idx);
    bool wrote = false;
    for (std::size_t f = 0; f < exps.size(); ++f) {
      if (exps[f] == 0) continue;
      if (wrote) os << '*';
      os << variable_name(a.group(), f);
      if (exps[f] > 1) os << '^' << exps[f];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

BitMatrix binary_rep(const GroupAlgebraElement& a) {
  const std::uint64_t l = a.group().size;
  BitMatrix m(l, l);
  for (std::uint64_t h = 0; h < l; ++h)
    for (std::uint64_t s : a.support()) m.set(a.group().add(s, h), h, true);
  return m;
}

RMatrix::RMatrix(FiniteAbelianGroup group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, GroupAlgebraElement(group_)) {}

RMatrix RMatrix::identity(const FiniteAbelianGroup& g, std::size_t n) {
  RMatrix m(g, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GroupAlgebraElement::one(g);
  return m;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("group mismatch in RMatrix product");
  if (cols_ != other.rows_) throw std::invalid_argument("RMatrix product dimension mismatch");
  RMatrix out(group_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GroupAlgebraElement& e = at(r, k);
      if (e.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (other.at(k, c).is_zero()) continue;
        out.at(r, c) = out.at(r, c) + e * other.at(k, c);
      }
    }
  return out;
}

RMatrix RMatrix::operator+(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RMatrix sum dimension mismatch");
  RMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = out.entries_[i] + other.entries_[i];
  return out;
}

RMatrix RMatrix::dagger() const {
  RMatrix out(group_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = antipode(at(r, c));
  return out;
}

bool RMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool RMatrix::operator==(const RMatrix& other) const {
  return group_ == other.group_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

BitMatrix binary_rep(const RMatrix& m) {
  const std::uint64_t l = m.group().size;
  BitMatrix out(m.rows() * l, m.cols() * l);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const GroupAlgebraElement& e = m.at(r, c);
      for (std::uint64_t h = 0; h < l; ++h)
        for (std::uint64_t s : e.support())
          out.set(r * l + m.group().add(s, h), c * l + h, true);
    }
  return out;
}

}  // namespace dimjump
