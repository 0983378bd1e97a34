#pragma once

// Arithmetic over Z_d, phase-space points and isotropic subspaces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmagic {

bool is_prime(int n);

// Reduce into [0, d).
constexpr int mod(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

int mod_inverse(int a, int d);
int legendre(int a, int p);
long long ipow(long long base, int exp);

// Local dimension d (prime) and qudit count N.
class PrimeDim {
 public:
  PrimeDim(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  // Hilbert-space dimension d^N.
  int hilbert() const { return hilbert_; }
  // Number of phase-space points d^{2N}.
  std::size_t points() const { return static_cast<std::size_t>(hilbert_) * hilbert_; }
  bool odd() const { return d_ != 2; }

  friend bool operator==(const PrimeDim&, const PrimeDim&) = default;

 private:
  int d_;
  int n_;
  int hilbert_;
};

std::string to_string(const PrimeDim& dims);

// chi = (p, q) in Z_d^N x Z_d^N; p is the X exponent, q the Z exponent.
class PhasePoint {
 public:
  PhasePoint(const std::vector<int>& p, const std::vector<int>& q, int d);
  static PhasePoint zero(const PrimeDim& dims);
  // Lexicographic index over (p_1..p_N, q_1..q_N), p_1 most significant.
  static PhasePoint from_index(std::size_t index, const PrimeDim& dims);
  static PhasePoint from_coords(std::span<const int> coords, int d);

  std::size_t index() const;
  int d() const { return d_; }
  int n() const { return static_cast<int>(v_.size() / 2); }
  std::span<const int> p() const { return {v_.data(), v_.size() / 2}; }
  std::span<const int> q() const { return {v_.data() + v_.size() / 2, v_.size() / 2}; }
  std::span<const int> coords() const { return v_; }
  bool is_zero() const;

  PhasePoint operator+(const PhasePoint& o) const;
  PhasePoint operator-(const PhasePoint& o) const;
  PhasePoint operator-() const;
  PhasePoint scaled(int k) const;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
  friend auto operator<=>(const PhasePoint& a, const PhasePoint& b) { return a.v_ <=> b.v_; }

 private:
  PhasePoint(std::vector<int> coords, int d) : d_(d), v_(std::move(coords)) {}
  int d_;
  std::vector<int> v_;
};

std::vector<PhasePoint> all_points(const PrimeDim& dims);
std::string to_string(const PhasePoint& chi);

// <(p,q),(p',q')> = p.q' - q.p' mod d
int symplectic_product(const PhasePoint& a, const PhasePoint& b);

// Dense matrix over Z_d (small sizes only).
class ZdMatrix {
 public:
  ZdMatrix(int rows, int cols, int d);
  ZdMatrix(int rows, int cols, int d, const std::vector<int>& row_major);
  static ZdMatrix identity(int n, int d);
  // Standard symplectic form J = [[0, I], [-I, 0]] of size 2N.
  static ZdMatrix symplectic_form(int n, int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int d() const { return d_; }
  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v) { a_[static_cast<std::size_t>(r) * cols_ + c] = mod(v, d_); }
  const std::vector<int>& data() const { return a_; }

  ZdMatrix operator*(const ZdMatrix& o) const;
  PhasePoint operator*(const PhasePoint& chi) const;
  ZdMatrix transpose() const;
  // Throws Errc::non_invertible when singular.
  ZdMatrix inverse() const;
  int determinant() const;

  friend bool operator==(const ZdMatrix&, const ZdMatrix&) = default;

 private:
  int rows_;
  int cols_;
  int d_;
  std::vector<int> a_;
};

std::string to_string(const ZdMatrix& m);

bool is_symplectic(const ZdMatrix& s);
// d^{N^2} prod_{i=1..N} (d^{2i} - 1)
long long symplectic_group_order(const PrimeDim& dims);
// Brute-force enumeration, feasible for d^{4N^2} <= 2^20.
std::vector<ZdMatrix> enumerate_symplectic(const PrimeDim& dims);

class IsotropicSubspace {
 public:
  // Builds the span of the generators; throws invalid_input if not isotropic.
  IsotropicSubspace(const std::vector<PhasePoint>& generators, const PrimeDim& dims);

  const std::vector<PhasePoint>& basis() const { return basis_; }
  const std::vector<PhasePoint>& elements() const { return elements_; }
  bool maximal() const { return maximal_; }
  bool contains(const PhasePoint& chi) const;
  int dimension() const { return static_cast<int>(basis_.size()); }

  friend bool operator==(const IsotropicSubspace& a, const IsotropicSubspace& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<PhasePoint> basis_;     // reduced row echelon form
  std::vector<PhasePoint> elements_;  // sorted
  bool maximal_ = false;
};

std::vector<IsotropicSubspace> enumerate_maximal_isotropic(const PrimeDim& dims);

}  // namespace qmagic
