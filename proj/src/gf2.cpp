#include "z2e/gf2.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace z2e {

namespace {

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from_word = 0) {
  for (std::size_t i = from_word; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t lowest_bit(std::span<const Word> words, std::size_t from_word, std::size_t len) {
  for (std::size_t w = from_word; w < words.size(); ++w) {
    if (words[w] != 0) {
      const std::size_t bit = w * kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
      return std::min(bit, len);
    }
  }
  return len;
}

}  // namespace

// ---------------------------------------------------------------- Gf2Vector

Gf2Vector Gf2Vector::unit(std::size_t len, std::size_t i) {
  Gf2Vector v(len);
  v.set(i);
  return v;
}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may contain only '0' and '1'");
  }
  return v;
}

bool Gf2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Gf2Vector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Gf2Vector::first() const { return lowest_bit(words_, 0, len_); }

std::size_t Gf2Vector::next(std::size_t from) const {
  if (from >= len_) return len_;
  std::size_t w = from / kWordBits;
  Word masked = words_[w] & (~Word{0} << (from % kWordBits));
  if (masked != 0)
    return std::min(w * kWordBits + static_cast<std::size_t>(std::countr_zero(masked)), len_);
  return lowest_bit(words_, w + 1, len_);
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < len_; i = next(i + 1)) out.push_back(i);
  return out;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.len_ != len_) throw std::invalid_argument("Gf2Vector::dot: length mismatch");
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.len_ != len_) throw std::invalid_argument("Gf2Vector: length mismatch");
  xor_words(words_, other.words_);
  return *this;
}

Gf2Vector& Gf2Vector::operator&=(const Gf2Vector& other) {
  if (other.len_ != len_) throw std::invalid_argument("Gf2Vector: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::string Gf2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const Word diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      // the lowest differing index decides; b has the 1 there iff a < b
      const Word low = diff & (~diff + 1);
      return (b.words_[w] & low) != 0;
    }
  }
  return false;
}

// ---------------------------------------------------------------- Gf2Matrix

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::hyperbolic(std::size_t g) {
  Gf2Matrix m(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    m.set(2 * i, 2 * i + 1);
    m.set(2 * i + 1, 2 * i);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<Gf2Vector>& rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<Gf2Vector>& cols, std::size_t rows) {
  Gf2Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix rows have different lengths");
    m.set_row(r, Gf2Vector::from_string(rows[r]));
  }
  return m;
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
  Gf2Vector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

Gf2Vector Gf2Matrix::col(std::size_t c) const {
  Gf2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void Gf2Matrix::set_col(std::size_t c, const Gf2Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

void Gf2Matrix::add_row(std::size_t src, std::size_t dst) {
  xor_words(row_words(dst), row_words(src));
}

void Gf2Matrix::add_col(std::size_t src, std::size_t dst) {
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, src)) flip(r, dst);
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

void Gf2Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const bool x = get(r, a), y = get(r, b);
    set(r, a, y);
    set(r, b, x);
  }
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word x = words[w];
      while (x != 0) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        t.set(c, r);
        x &= x - 1;
      }
    }
  }
  return t;
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Gf2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    Word acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) acc ^= words[w] & v.words()[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Gf2Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto dst = out.row_words(r);
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a.get(r, k)) xor_words(dst, b.row_words(k));
  }
  return out;
}

Gf2Matrix& Gf2Matrix::operator^=(const Gf2Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool Gf2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

Gf2Matrix Gf2Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Gf2Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(rows[i], cols[j])) out.set(i, j);
  return out;
}

std::vector<std::string> Gf2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
  return out;
}

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b.get(p, q)) out.set(i * b.rows() + p, j * b.cols() + q);
    }
  return out;
}

// ---------------------------------------------------------------- elimination

std::size_t rank(Gf2Matrix m) {
  // forward elimination only; rows below the pivot are cleared starting at
  // the pivot word since earlier words are already zero there
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    const std::size_t w = c / kWordBits;
    const Word mask = Word{1} << (c % kWordBits);
    std::size_t p = r;
    while (p < rows && !(m.row_words(p)[w] & mask)) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    auto pivot = m.row_words(r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto row = m.row_words(i);
      if (row[w] & mask) xor_words(row, pivot, w);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> reduce_rows(Gf2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c / kWordBits;
    const Word mask = Word{1} << (c % kWordBits);
    std::size_t p = r;
    while (p < m.rows() && !(m.row_words(p)[w] & mask)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    auto pivot = m.row_words(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row_words(i);
      if (row[w] & mask) xor_words(row, pivot, w);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
  Gf2Matrix red = m;
  const auto pivots = reduce_rows(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Gf2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (red.get(i, f)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: right-hand side length != rows");
  // augmented matrix [M | b]
  Gf2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) aug.set(r, c);
    if (b.get(r)) aug.set(r, m.cols());
  }
  const auto pivots = reduce_rows(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

  AffineSolution sol{Gf2Vector(m.cols()), {}};
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (aug.get(i, m.cols())) sol.particular.set(pivots[i]);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (aug.get(i, f)) v.set(pivots[i]);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Gf2Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (m.get(r, c)) aug.set(r, c);
    aug.set(r, n + r);
  }
  const auto pivots = reduce_rows(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Gf2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (aug.get(r, n + c)) inv.set(r, c);
  return inv;
}

// ---------------------------------------------------------------- SpanBuilder

bool SpanBuilder::add(const Gf2Vector& v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder::add: length mismatch");
  const std::size_t index = combos_.empty() ? 0 : combos_.front().size();
  Gf2Vector x = v;
  Gf2Vector combo(index + 1);
  combo.set(index);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (x.get(pivots_[i])) {
      x ^= rows_[i];
      for (auto j : combos_[i].support()) combo.flip(j);
    }
  }
  if (x.is_zero()) return false;
  // widen existing combinations by one slot
  for (auto& c : combos_) {
    Gf2Vector wider(index + 1);
    for (auto j : c.support()) wider.set(j);
    c = std::move(wider);
  }
  rows_.push_back(std::move(x));
  pivots_.push_back(rows_.back().first());
  combos_.push_back(std::move(combo));
  return true;
}

std::optional<Gf2Vector> SpanBuilder::express(const Gf2Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder::express: length mismatch");
  Gf2Vector x = v;
  Gf2Vector coeffs(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (x.get(pivots_[i])) {
      x ^= rows_[i];
      for (auto j : combos_[i].support()) coeffs.flip(j);
    }
  }
  if (!x.is_zero()) return std::nullopt;
  return coeffs;
}

// ---------------------------------------------------------------- forms

const char* to_string(FormType t) {
  return t == FormType::Alternating ? "Alternating" : "NonAlternating";
}

FormType form_type(const Gf2Matrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("form_type: matrix is not symmetric");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.get(i, i)) return FormType::NonAlternating;
  return FormType::Alternating;
}

CongruenceForm congruence_normal_form(const Gf2Matrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("congruence_normal_form: matrix is not symmetric");
  const std::size_t n = a.rows();
  Gf2Matrix cur = a;
  Gf2Matrix s = Gf2Matrix::identity(n);
  CongruenceDescriptor d;

  // simultaneous column op on S and congruence op on cur: e_dst += e_src
  auto add = [&](std::size_t src, std::size_t dst) {
    s.add_col(src, dst);
    cur.add_col(src, dst);
    cur.add_row(src, dst);
  };
  auto swap = [&](std::size_t x, std::size_t y) {
    s.swap_cols(x, y);
    cur.swap_cols(x, y);
    cur.swap_rows(x, y);
  };

  std::size_t p = 0;
  // diagonal sweep: while some remaining diagonal entry is 1
  while (p < n) {
    std::size_t i = p;
    while (i < n && !cur.get(i, i)) ++i;
    if (i == n) break;
    swap(p, i);
    for (std::size_t j = p + 1; j < n; ++j)
      if (cur.get(p, j)) add(p, j);
    ++d.ones;
    ++p;
  }
  // the remainder has zero diagonal, and hyperbolic clearing keeps it so
  while (p < n) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = p; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (cur.get(i, j)) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    swap(p, pi);
    swap(p + 1, pj);
    // cur[p][p+1] == 1; clear the rest of rows p and p+1
    for (std::size_t j = p + 2; j < n; ++j) {
      const bool hp = cur.get(p, j), hq = cur.get(p + 1, j);
      if (hq) add(p, j);
      if (hp) add(p + 1, j);
    }
    ++d.hyperbolic_pairs;
    p += 2;
  }
  d.zeros = n - p;
  return {std::move(s), d};
}

Gf2Matrix normal_form_matrix(const CongruenceDescriptor& d) {
  const std::size_t n = d.ones + 2 * d.hyperbolic_pairs + d.zeros;
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < d.ones; ++i) m.set(i, i);
  for (std::size_t h = 0; h < d.hyperbolic_pairs; ++h) {
    const std::size_t i = d.ones + 2 * h;
    m.set(i, i + 1);
    m.set(i + 1, i);
  }
  return m;
}

// ---------------------------------------------------------------- text format

Gf2Matrix read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw std::invalid_argument("matrix text: expected 'rows cols' header");
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw std::invalid_argument("matrix text: missing row " + std::to_string(r));
    if (line.size() != cols) throw std::invalid_argument("matrix text: row " + std::to_string(r) + " has wrong length");
    m.set_row(r, Gf2Vector::from_string(line));
  }
  return m;
}

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& row : m.to_strings()) out << row << '\n';
}

}  // namespace z2e
