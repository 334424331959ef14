#ifndef MQ_FPMAT_HPP
#define MQ_FPMAT_HPP

#include <cstdint>
#include <vector>

namespace mq {

/// Arithmetic mod a prime p < 2^31.
struct Fp {
  std::int64_t p;
  std::int64_t norm(std::int64_t x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    return norm(a - b);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1 % p;
    a %= p;
    for (; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  }
  std::int64_t inv(std::int64_t a) const { return pow(norm(a), p - 2); }
};

/// Dense row-major matrix over F_p.
struct FpMat {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

FpMat fp_mul(const Fp& F, const FpMat& A, const FpMat& B);
std::int64_t fp_trace(const Fp& F, const FpMat& A);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> fp_rref(const Fp& F, FpMat& A);

int fp_rank(const Fp& F, FpMat A);

/// Basis of the right nullspace {x : A x = 0}, rows of the result.
FpMat fp_nullspace(const Fp& F, FpMat A);

/// Incrementally built row space in echelon form; insert returns true
/// when the vector enlarged the space.
class FpRowSpace {
 public:
  FpRowSpace(const Fp& F, int cols) : F_(F), cols_(cols) {}
  bool insert(std::vector<std::int64_t> v);
  /// Reduce a copy of v against the space; empty result means membership.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
  bool contains(std::vector<std::int64_t> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivot_; }
  FpMat to_matrix() const;

 private:
  Fp F_;
  int cols_;
  std::vector<std::vector<std::int64_t>> rows_;  // echelon, pivot = 1
  std::vector<int> pivot_;
};

}  // namespace mq

#endif
