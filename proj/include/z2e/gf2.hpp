#pragma once

// Bit-packed dense linear algebra over GF(2).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2e {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-length vector over GF(2). Addition is XOR.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

  static Gf2Vector unit(std::size_t len, std::size_t i);
  /// Parses a string of '0'/'1' characters.
  static Gf2Vector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first() const;
  /// Index of the lowest set bit at or after `from`, or size().
  std::size_t next(std::size_t from) const;
  std::vector<std::size_t> support() const;

  bool dot(const Gf2Vector& other) const;
  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  /// Entrywise AND.
  Gf2Vector& operator&=(const Gf2Vector& other);

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  /// Lexicographic order on the bit string (index 0 most significant).
  friend bool operator<(const Gf2Vector& a, const Gf2Vector& b);

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix; each row is padded to whole words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static Gf2Matrix identity(std::size_t n);
  /// H_g: 2g x 2g block diagonal with [[0,1],[1,0]] blocks.
  static Gf2Matrix hyperbolic(std::size_t g);
  static Gf2Matrix from_rows(const std::vector<Gf2Vector>& rows, std::size_t cols);
  static Gf2Matrix from_columns(const std::vector<Gf2Vector>& cols, std::size_t rows);
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

  Gf2Vector row(std::size_t r) const;
  Gf2Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Gf2Vector& v);
  void set_col(std::size_t c, const Gf2Vector& v);
  /// row[dst] ^= row[src]
  void add_row(std::size_t src, std::size_t dst);
  void add_col(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  Gf2Matrix transpose() const;
  Gf2Vector operator*(const Gf2Vector& v) const;
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  Gf2Matrix& operator^=(const Gf2Matrix& other);
  friend Gf2Matrix operator^(Gf2Matrix a, const Gf2Matrix& b) { return a ^= b; }

  bool is_zero() const;
  bool is_symmetric() const;
  Gf2Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Kronecker product a (x) b.
Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b);

std::size_t rank(Gf2Matrix m);

/// Reduced row echelon form in place; pivots are the lowest-index nonzero
/// columns. Returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce_rows(Gf2Matrix& m);

/// Basis of {x : M x = 0}, one vector per free column, in column order.
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);

struct AffineSolution {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel;
};

/// Solves M x = b. Returns nullopt iff the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const Gf2Vector& b);

/// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);

/// Incremental span with coordinates: tracks which inputs are independent and
/// expresses vectors in terms of them.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true when v was independent of everything added so far.
  bool add(const Gf2Vector& v);
  std::size_t rank() const { return pivots_.size(); }
  /// Coefficients over the accepted inputs (in acceptance order), or nullopt
  /// when v is outside the span.
  std::optional<Gf2Vector> express(const Gf2Vector& v) const;

 private:
  std::size_t dim_;
  // reduced rows, their pivot columns, and the combination of accepted inputs
  // that produced each row
  std::vector<Gf2Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Gf2Vector> combos_;
};

enum class FormType { Alternating, NonAlternating };

const char* to_string(FormType t);

/// NonAlternating iff some diagonal entry is 1. Requires a symmetric matrix.
FormType form_type(const Gf2Matrix& a);

struct CongruenceDescriptor {
  std::size_t ones = 0;
  std::size_t hyperbolic_pairs = 0;
  std::size_t zeros = 0;
  friend bool operator==(const CongruenceDescriptor&, const CongruenceDescriptor&) = default;
};

struct CongruenceForm {
  Gf2Matrix transform;  // S, invertible
  CongruenceDescriptor descriptor;
};

/// Finds invertible S with S^T A S = diag(I_ones, H_pairs, 0).
CongruenceForm congruence_normal_form(const Gf2Matrix& a);

/// Block matrix diag(I_ones, H_pairs, 0_zeros).
Gf2Matrix normal_form_matrix(const CongruenceDescriptor& d);

/// Text format: "rows cols" then one line of '0'/'1' per row.
Gf2Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Gf2Matrix& m);

}  // namespace z2e
