#pragma once

// Degree-truncated ideal membership by linear algebra: f lies in the span of
// {m * g : deg(m * g) <= D} iff appending f to the Macaulay matrix leaves its
// rank unchanged. For homogeneous generators and D = deg f this decides
// membership exactly. Elimination is done here, not through the library.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "socle/polynomial.hpp"

namespace oracle {

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t s = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = v * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

// All exponent vectors in `nvars` variables with total degree <= `degree`.
inline std::vector<socle::Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<socle::Monomial> out{socle::Monomial(nvars)};
  std::size_t begin = 0;
  for (unsigned d = 1; d <= degree; ++d) {
    const std::size_t end = out.size();
    std::vector<socle::Monomial> next;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t v = 0; v < nvars; ++v) {
        socle::Monomial m = out[i] * socle::Monomial::variable(nvars, v);
        bool seen = false;
        for (const auto& n : next) seen = seen || n == m;
        if (!seen) next.push_back(m);
      }
    }
    begin = end;
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

inline bool member_up_to_degree(const socle::Polynomial& f, const std::vector<socle::Polynomial>& gens,
                                unsigned degree) {
  const auto& ring = f.ring();
  const std::uint64_t p = ring->field().characteristic();
  const auto monos = monomials_up_to(ring->nvars(), degree);
  std::unordered_map<socle::Monomial, std::size_t, socle::MonomialHash> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
  auto row_of = [&](const socle::Polynomial& g) {
    std::vector<std::uint64_t> row(monos.size(), 0);
    for (const auto& t : g.terms()) row[col.at(t.monomial)] = t.coeff.residue();
    return row;
  };
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : monos) {
      if (m.degree() + g.total_degree() > degree) continue;
      rows.push_back(row_of(g.mul_term(m, ring->field().one())));
    }
  }
  if (f.is_zero()) return true;
  if (f.total_degree() > degree) return false;
  const std::size_t before = rank_mod_p(rows, p);
  rows.push_back(row_of(f));
  return rank_mod_p(rows, p) == before;
}

}  // namespace oracle
