#pragma once

// Hermite reduction of O-lattices, O = F_q[s]_(s), carried out in the finite
// chain ring O / s^N. Exact as long as s^N O^n lies inside the lattice, which
// holds whenever N exceeds the valuation of the lattice's covolume.

#include <cstdint>
#include <vector>

#include "sectorlab/polyring.hpp"

namespace sectorlab::lattice {

/// Hard cap on the working precision N.
inline constexpr int kMaxPrecision = 1024;

/// rows x cols matrix with entries in F_q[s] / s^N.
class SeriesMatrix {
 public:
  SeriesMatrix(poly::PrimeField field, int rows, int cols, int precision);

  const poly::PrimeField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int precision() const { return prec_; }

  poly::Residue* entry(int i, int j) { return &data_[offset(i, j)]; }
  const poly::Residue* entry(int i, int j) const { return &data_[offset(i, j)]; }

 private:
  std::size_t offset(int i, int j) const {
    return (static_cast<std::size_t>(i) * cols_ + j) * prec_;
  }

  poly::PrimeField field_;
  int rows_, cols_, prec_;
  std::vector<poly::Residue> data_;
};

/// Result of reduction: diagonal exponents and reduced sub-diagonal entries,
/// homothety-normalized so the minimum valuation over all entries is 0.
struct HermiteForm {
  std::vector<int> exponents;
  std::vector<std::vector<poly::Residue>> lower;  // packed (i, j), i > j
};

/// Column Hermite form of the lattice spanned by the columns of m (rows <= cols).
/// Throws PrecisionError if the columns do not span a full-rank lattice
/// modulo s^N.
HermiteForm hermite_reduce(SeriesMatrix m);

/// Power series of num/den modulo s^precision; den(0) must be nonzero.
std::vector<poly::Residue> series_quotient(const poly::PrimeField& field,
                                           const std::vector<poly::Residue>& num,
                                           const std::vector<poly::Residue>& den, int precision);

}  // namespace sectorlab::lattice
