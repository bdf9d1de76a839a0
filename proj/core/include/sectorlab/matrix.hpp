#pragma once

// Small dense square matrices over F_q[t] and F_q(t).

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sectorlab/polyring.hpp"

namespace sectorlab {

template <typename Entry>
class SquareMatrix {
 public:
  SquareMatrix(poly::PrimeField field, int n)
      : field_(field), n_(n), entries_(static_cast<std::size_t>(n) * n, Entry(field)) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
  }

  static SquareMatrix identity(poly::PrimeField field, int n) {
    SquareMatrix m(field, n);
    for (int i = 0; i < n; ++i) m(i, i) = Entry(poly::Polynomial::constant(field, 1));
    return m;
  }

  const poly::PrimeField& field() const { return field_; }
  int size() const { return n_; }
  Entry& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const Entry& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<Entry>& entries() const { return entries_; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    SquareMatrix c(a.field_, a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Entry& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          const Entry& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) = c(i, j) + aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  /// Leibniz expansion; sizes here are tiny (n <= 6).
  Entry determinant() const {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    Entry det(field_);
    do {
      Entry term = Entry(poly::Polynomial::constant(field_, 1));
      for (int i = 0; i < n_ && !term.is_zero(); ++i) term = term * (*this)(i, perm[i]);
      if (term.is_zero()) continue;
      det = permutation_sign(perm) > 0 ? det + term : det - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
  }

  /// Adjugate (transpose of the cofactor matrix).
  SquareMatrix adjugate() const {
    SquareMatrix adj(field_, n_);
    if (n_ == 1) {
      adj(0, 0) = Entry(poly::Polynomial::constant(field_, 1));
      return adj;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        SquareMatrix minor(field_, n_ - 1);
        for (int r = 0, mr = 0; r < n_; ++r) {
          if (r == j) continue;
          for (int c = 0, mc = 0; c < n_; ++c) {
            if (c == i) continue;
            minor(mr, mc++) = (*this)(r, c);
          }
          ++mr;
        }
        Entry cof = minor.determinant();
        adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
      }
    return adj;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  static int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  poly::PrimeField field_;
  int n_;
  std::vector<Entry> entries_;
};

using PolyMatrix = SquareMatrix<poly::Polynomial>;
using RatMatrix = SquareMatrix<poly::RationalFunction>;

RatMatrix to_rational(const PolyMatrix& m);

/// Inverse over F_q(t) by Gauss-Jordan elimination.
RatMatrix inverse(const RatMatrix& m);

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

/// Largest entry degree (kDegreeOfZero for the zero matrix).
int max_degree(const PolyMatrix& m);

/// Constant coefficients of every entry.
PolyMatrix constant_term(const PolyMatrix& m);

struct PolyMatrixHash {
  std::size_t operator()(const PolyMatrix& m) const noexcept;
};

}  // namespace sectorlab
