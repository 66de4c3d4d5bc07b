#include "ksalg/f2matrix.hpp"

#include <algorithm>
#include <numeric>

#include "ksalg/f2_kernels.hpp"
#include "ksalg/istates.hpp"

namespace ksalg {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

void F2Matrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t m = std::uint64_t{1} << (c & 63);
  if (v) row(r)[c >> 6] |= m;
  else row(r)[c >> 6] &= ~m;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + words_, row(b));
}

void F2Matrix::append_row(const BitVec& v) {
  if (v.size() != words_) throw InvalidArgument("row width mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<std::size_t> F2Matrix::row_reduce(std::size_t col_limit) {
  std::vector<std::size_t> piv;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < col_limit && cur < rows_; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    std::size_t r = cur;
    while (r < rows_ && !(row(r)[w] & m)) ++r;
    if (r == rows_) continue;
    swap_rows(cur, r);
    const std::uint64_t* p = row(cur);
    for (std::size_t q = 0; q < rows_; ++q)
      if (q != cur && (row(q)[w] & m)) f2::xor_row(row(q) + w, p + w, words_ - w);
    piv.push_back(c);
    ++cur;
  }
  return piv;
}

std::size_t F2Matrix::rank() const {
  F2Matrix t = *this;
  return t.row_reduce().size();
}

std::string F2Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

EchelonBasis EchelonBasis::span_of(std::size_t dim, const std::vector<BitVec>& vecs) {
  EchelonBasis e;
  e.dim = dim;
  F2Matrix m(0, dim);
  for (const auto& v : vecs) m.append_row(v);
  auto piv = m.row_reduce();
  for (std::size_t a = 0; a < piv.size(); ++a) e.rows.push_back(m.row_vec(a));
  e.pivots = std::move(piv);
  return e;
}

std::vector<bool> EchelonBasis::reduce(BitVec& v) const {
  std::vector<bool> used(rows.size(), false);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (!bit_get(v, pivots[a])) continue;
    f2::xor_row(v.data(), rows[a].data(), v.size());
    used[a] = true;
  }
  return used;
}

std::optional<BitVec> solve_f2(std::size_t target_dim, const std::vector<BitVec>& images, const BitVec& target,
                               const std::vector<std::size_t>* order) {
  const std::size_t n = images.size();
  std::vector<std::size_t> ord(n);
  if (order) ord = *order;
  else std::iota(ord.begin(), ord.end(), 0);
  // augmented rows [image | unit vector]
  F2Matrix m(n, target_dim + n);
  for (std::size_t r = 0; r < n; ++r) {
    const BitVec& im = images[ord[r]];
    for (std::size_t c = 0; c < target_dim; ++c)
      if (bit_get(im, c)) m.set(r, c, true);
    m.set(r, target_dim + ord[r], true);
  }
  auto piv = m.row_reduce(target_dim);
  BitVec acc(m.words(), 0);
  for (std::size_t c = 0; c < target_dim; ++c)
    if (bit_get(target, c)) bit_set(acc, c);
  for (std::size_t a = 0; a < piv.size(); ++a)
    if (bit_get(acc, piv[a])) f2::xor_row(acc.data(), m.row(a), m.words());
  for (std::size_t c = 0; c < target_dim; ++c)
    if (bit_get(acc, c)) return std::nullopt;
  BitVec sol(words_for(n), 0);
  for (std::size_t j = 0; j < n; ++j)
    if (bit_get(acc, target_dim + j)) bit_set(sol, j);
  return sol;
}

}  // namespace ksalg
