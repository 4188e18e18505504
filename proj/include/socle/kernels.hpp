#pragma once

#include <cstdint>
#include <vector>

#include "socle/parallel.hpp"

namespace socle::kernels {

/// Row-major dense matrix over F_p.
struct MatrixModP {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> data;

  MatrixModP() = default;
  MatrixModP(std::size_t r, std::size_t c, std::uint32_t prime) : rows(r), cols(c), p(prime), data(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Gaussian elimination, one pivot column at a time.
std::size_t rank_serial(MatrixModP m);
/// Same elimination with the row updates below each pivot split across threads.
std::size_t rank_parallel(MatrixModP m);

inline std::size_t rank(MatrixModP m, exec::Policy policy = exec::default_policy()) {
  return policy == exec::Policy::Serial ? rank_serial(std::move(m)) : rank_parallel(std::move(m));
}

/// Dimension of {v : A v = 0}.
inline std::size_t nullity(const MatrixModP& m, exec::Policy policy = exec::default_policy()) {
  return m.cols - rank(m, policy);
}

}  // namespace socle::kernels
