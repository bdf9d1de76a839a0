#pragma once

// Integral simplicial chain complexes and their homology via Smith normal form.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sectorlab::homology {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Chains on an abstract simplicial complex; simplices are sorted vertex-id tuples.
struct IntegerChainComplex {
  std::vector<std::vector<std::vector<int>>> bases;  // bases[p]: the p-simplices, sorted
  std::vector<IntegerMatrix> boundary;               // boundary[p]: C_p -> C_{p-1}; boundary[0] is 0 x |C_0|

  int top_dimension() const { return static_cast<int>(bases.size()) - 1; }
  std::size_t rank(int p) const { return p >= 0 && p < static_cast<int>(bases.size()) ? bases[p].size() : 0; }
};

/// Boundary with signs (-1)^k for dropping the k-th vertex. Throws
/// std::invalid_argument if a face is missing and InvariantViolation if the
/// composite of consecutive boundaries is nonzero.
IntegerChainComplex boundary_matrices(std::vector<std::vector<int>> simplices);

/// The complex of sector simplices with a_1 <= r.
IntegerChainComplex sector_complex(int n, int r);

/// Boundary of a triangle: three vertices and three edges.
IntegerChainComplex circle_fixture();

struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols), d_1 | d_2 | ..., zeros last
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_0, ..., H_top.
std::vector<HomologyGroup> homology_groups(const IntegerChainComplex& c);

/// Alternating sum of chain ranks.
long euler_characteristic(const IntegerChainComplex& c);

}  // namespace sectorlab::homology
