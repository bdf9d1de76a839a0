#include "sectorlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "sectorlab/errors.hpp"

namespace sectorlab::lattice {

using poly::PrimeField;
using poly::Residue;

SeriesMatrix::SeriesMatrix(PrimeField field, int rows, int cols, int precision)
    : field_(field), rows_(rows), cols_(cols), prec_(precision) {
  if (rows < 1 || cols < rows) throw std::invalid_argument("series matrix needs 1 <= rows <= cols");
  if (precision < 1) throw std::invalid_argument("series precision must be positive");
  if (precision > kMaxPrecision)
    throw PrecisionError("lattice reduction needs precision " + std::to_string(precision) +
                         ", above the cap of " + std::to_string(kMaxPrecision));
  data_.assign(static_cast<std::size_t>(rows) * cols * precision, 0);
}

namespace {

int valuation(const Residue* x, int prec) {
  for (int k = 0; k < prec; ++k)
    if (x[k] != 0) return k;
  return prec;
}

// 1/u mod s^prec for a unit u.
std::vector<Residue> unit_inverse(const PrimeField& F, const Residue* u, int prec) {
  std::vector<Residue> inv(prec, 0);
  const Residue u0_inv = F.inv(u[0]);
  inv[0] = u0_inv;
  for (int k = 1; k < prec; ++k) {
    std::uint64_t acc = 0;
    for (int i = 1; i <= k; ++i)
      if (u[i] != 0 && inv[k - i] != 0) acc += std::uint64_t{u[i]} * inv[k - i] % F.modulus();
    inv[k] = F.mul(F.neg(F.reduce(static_cast<std::int64_t>(acc % F.modulus()))), u0_inv);
  }
  return inv;
}

// dst -= f * src (mod s^prec). f has leading zeros skipped via `f_val`.
void sub_mul(const PrimeField& F, Residue* dst, const Residue* f, int f_val, const Residue* src,
             int prec) {
  const int src_val = valuation(src, prec);
  if (f_val + src_val >= prec) return;
  const std::uint32_t q = F.modulus();
  for (int i = f_val; i < prec - src_val; ++i) {
    if (f[i] == 0) continue;
    const std::uint64_t fi = f[i];
    for (int j = src_val; i + j < prec; ++j) {
      if (src[j] == 0) continue;
      dst[i + j] = F.sub(dst[i + j], static_cast<Residue>(fi * src[j] % q));
    }
  }
}

// x <- x * u (mod s^prec).
void mul_in_place(const PrimeField& F, Residue* x, const std::vector<Residue>& u, int prec) {
  std::vector<std::uint64_t> acc(prec, 0);
  const std::uint32_t q = F.modulus();
  for (int i = 0; i < prec; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j < prec; ++j)
      if (u[j] != 0) acc[i + j] = (acc[i + j] + std::uint64_t{x[i]} * u[j]) % q;
  }
  for (int k = 0; k < prec; ++k) x[k] = static_cast<Residue>(acc[k]);
}

void swap_columns(SeriesMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r)
    std::swap_ranges(m.entry(r, a), m.entry(r, a) + m.precision(), m.entry(r, b));
}

// col_c -= f * col_p over rows [from, rows).
void column_axpy(SeriesMatrix& m, int c, int p, const Residue* f, int from) {
  const int prec = m.precision();
  const int f_val = valuation(f, prec);
  if (f_val >= prec) return;
  for (int r = from; r < m.rows(); ++r) sub_mul(m.field(), m.entry(r, c), f, f_val, m.entry(r, p), prec);
}

}  // namespace

HermiteForm hermite_reduce(SeriesMatrix m) {
  const int n = m.rows();
  const int cols = m.cols();
  const int prec = m.precision();
  const PrimeField& F = m.field();
  std::vector<int> exps(n);
  std::vector<Residue> f(prec);

  for (int i = 0; i < n; ++i) {
    int best = -1, best_val = prec;
    for (int c = i; c < cols; ++c) {
      int v = valuation(m.entry(i, c), prec);
      if (v < best_val) {
        best_val = v;
        best = c;
      }
    }
    if (best < 0)
      throw PrecisionError("lattice is degenerate modulo s^" + std::to_string(prec));
    swap_columns(m, i, best);
    // Make the pivot exactly s^v by scaling with the inverse of its unit part.
    std::vector<Residue> unit(prec, 0);
    std::copy(m.entry(i, i) + best_val, m.entry(i, i) + prec, unit.begin());
    auto uinv = unit_inverse(F, unit.data(), prec);
    for (int r = i; r < n; ++r) mul_in_place(F, m.entry(r, i), uinv, prec);
    exps[i] = best_val;
    for (int c = i + 1; c < cols; ++c) {
      const Residue* e = m.entry(i, c);
      if (valuation(e, prec) >= prec) continue;
      std::fill(f.begin(), f.end(), 0);
      std::copy(e + best_val, e + prec, f.begin());
      column_axpy(m, c, i, f.data(), i);
    }
  }
  // Reduce entry (i, j) modulo s^{a_i}, top row first so later rows absorb the fallout.
  for (int i = 1; i < n; ++i) {
    const int a = exps[i];
    for (int j = 0; j < i; ++j) {
      Residue* e = m.entry(i, j);
      if (valuation(e + a, prec - a) >= prec - a) continue;
      std::fill(f.begin(), f.end(), 0);
      std::copy(e + a, e + prec, f.begin());
      column_axpy(m, j, i, f.data(), i);
    }
  }
  // Homothety: divide by the smallest power of s present.
  int mu = *std::min_element(exps.begin(), exps.end());
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) mu = std::min(mu, valuation(m.entry(i, j), exps[i]));
  HermiteForm out;
  out.exponents.resize(n);
  for (int i = 0; i < n; ++i) out.exponents[i] = exps[i] - mu;
  out.lower.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const Residue* e = m.entry(i, j);
      out.lower.emplace_back(e + mu, e + exps[i]);
    }
  return out;
}

std::vector<Residue> series_quotient(const PrimeField& F, const std::vector<Residue>& num,
                                     const std::vector<Residue>& den, int precision) {
  if (precision <= 0) return {};
  if (den.empty() || den[0] == 0) throw std::domain_error("series denominator is not a unit");
  std::vector<Residue> d(precision, 0), out(precision, 0);
  std::copy_n(den.begin(), std::min<std::size_t>(den.size(), precision), d.begin());
  auto inv = unit_inverse(F, d.data(), precision);
  for (std::size_t i = 0; i < num.size() && static_cast<int>(i) < precision; ++i) {
    if (num[i] == 0) continue;
    for (int j = 0; static_cast<int>(i) + j < precision; ++j)
      out[i + j] = F.add(out[i + j], F.mul(num[i], inv[j]));
  }
  return out;
}

}  // namespace sectorlab::lattice
