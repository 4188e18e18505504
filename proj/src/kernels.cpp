#include "socle/kernels.hpp"

#include <utility>

namespace socle::kernels {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Finds a pivot for column c at or below row r and normalizes that row.
bool prepare_pivot(MatrixModP& m, std::size_t r, std::size_t c) {
  std::size_t pivot = r;
  while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
  if (pivot == m.rows) return false;
  if (pivot != r) {
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
  }
  std::uint64_t inv = inverse_mod(m.at(r, c), m.p);
  for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = static_cast<std::uint32_t>(m.at(r, k) * inv % m.p);
  return true;
}

void eliminate_row(MatrixModP& m, std::size_t pivot_row, std::size_t row, std::size_t c) {
  std::uint64_t f = m.at(row, c);
  if (f == 0) return;
  std::uint64_t neg = m.p - f;
  for (std::size_t k = c; k < m.cols; ++k) {
    m.at(row, k) = static_cast<std::uint32_t>((m.at(row, k) + neg * m.at(pivot_row, k)) % m.p);
  }
}

}  // namespace

std::size_t rank_serial(MatrixModP m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    if (!prepare_pivot(m, r, c)) continue;
    for (std::size_t row = r + 1; row < m.rows; ++row) eliminate_row(m, r, row, c);
    ++r;
  }
  return r;
}

std::size_t rank_parallel(MatrixModP m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    if (!prepare_pivot(m, r, c)) continue;
    const auto first = static_cast<long long>(r + 1);
    const auto last = static_cast<long long>(m.rows);
#pragma omp parallel for schedule(static)
    for (long long row = first; row < last; ++row) eliminate_row(m, r, static_cast<std::size_t>(row), c);
    ++r;
  }
  return r;
}

}  // namespace socle::kernels
