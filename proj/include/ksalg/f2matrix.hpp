#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksalg {

using BitVec = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
inline bool bit_get(const BitVec& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void bit_flip(BitVec& v, std::size_t i) { v[i >> 6] ^= std::uint64_t{1} << (i & 63); }
inline void bit_set(BitVec& v, std::size_t i) { v[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Dense bit-packed matrix over F2, row major.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  BitVec row_vec(std::size_t r) const { return BitVec(row(r), row(r) + words_); }
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(const BitVec& v);

  // Gauss-Jordan on columns [0, col_limit). Pivot rows are moved to the top in pivot order;
  // returns the pivot column of each of them.
  std::vector<std::size_t> row_reduce(std::size_t col_limit);
  std::vector<std::size_t> row_reduce() { return row_reduce(cols_); }
  std::size_t rank() const;

  bool operator==(const F2Matrix& o) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// A reduced row echelon basis of a subspace; used for canonical coset representatives.
struct EchelonBasis {
  std::size_t dim = 0;  // ambient dimension
  std::vector<BitVec> rows;
  std::vector<std::size_t> pivots;

  static EchelonBasis span_of(std::size_t dim, const std::vector<BitVec>& vecs);
  // clears the pivot columns of v; returns which rows were used
  std::vector<bool> reduce(BitVec& v) const;
  std::size_t rank() const { return rows.size(); }
};

// Solves sum_j a_j * images[j] = target. Rows are eliminated in `order` (a permutation of
// image indices) which changes the witness picked when the map has a kernel.
std::optional<BitVec> solve_f2(std::size_t target_dim, const std::vector<BitVec>& images, const BitVec& target,
                               const std::vector<std::size_t>* order = nullptr);

}  // namespace ksalg
