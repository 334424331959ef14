#include "mq/fpmat.hpp"

#include "mq/error.hpp"

namespace mq {

FpMat fp_mul(const Fp& F, const FpMat& A, const FpMat& B) {
  if (A.cols != B.rows) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  FpMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      std::int64_t v = A.at(i, k);
      if (!v) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = (C.at(i, j) + v * B.at(k, j)) % F.p;
    }
  return C;
}

std::int64_t fp_trace(const Fp& F, const FpMat& A) {
  std::int64_t t = 0;
  for (int i = 0; i < A.rows && i < A.cols; ++i) t = F.add(t, A.at(i, i));
  return t;
}

std::vector<int> fp_rref(const Fp& F, FpMat& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    std::int64_t s = F.inv(A.at(r, c));
    for (int j = c; j < A.cols; ++j) A.at(r, j) = A.at(r, j) * s % F.p;
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || !A.at(i, c)) continue;
      std::int64_t f = A.at(i, c);
      for (int j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), f * A.at(r, j) % F.p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int fp_rank(const Fp& F, FpMat A) {
  return static_cast<int>(fp_rref(F, A).size());
}

FpMat fp_nullspace(const Fp& F, FpMat A) {
  auto pivots = fp_rref(F, A);
  std::vector<char> isPivot(A.cols, 0);
  for (int c : pivots) isPivot[c] = 1;
  std::vector<int> freeCols;
  for (int c = 0; c < A.cols; ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  FpMat N(static_cast<int>(freeCols.size()), A.cols);
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    int fc = freeCols[k];
    N.at(static_cast<int>(k), fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      N.at(static_cast<int>(k), pivots[r]) =
          F.norm(-A.at(static_cast<int>(r), fc));
  }
  return N;
}

bool FpRowSpace::insert(std::vector<std::int64_t> v) {
  v = reduce(std::move(v));
  int lead = -1;
  for (int c = 0; c < cols_; ++c)
    if (v[c]) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  std::int64_t s = F_.inv(v[lead]);
  for (int c = lead; c < cols_; ++c) v[c] = v[c] * s % F_.p;
  // keep existing rows reduced against the new one
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::int64_t f = rows_[i][lead];
    if (!f) continue;
    for (int c = lead; c < cols_; ++c)
      rows_[i][c] = F_.sub(rows_[i][c], f * v[c] % F_.p);
  }
  std::size_t pos = 0;
  while (pos < pivot_.size() && pivot_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivot_.insert(pivot_.begin() + pos, lead);
  return true;
}

std::vector<std::int64_t> FpRowSpace::reduce(std::vector<std::int64_t> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::int64_t f = v[pivot_[i]] % F_.p;
    if (!f) continue;
    const auto& r = rows_[i];
    for (int c = pivot_[i]; c < cols_; ++c) v[c] = F_.sub(v[c], f * r[c] % F_.p);
  }
  return v;
}

bool FpRowSpace::contains(std::vector<std::int64_t> v) const {
  v = reduce(std::move(v));
  for (auto x : v)
    if (x % F_.p) return false;
  return true;
}

FpMat FpRowSpace::to_matrix() const {
  FpMat A(dim(), cols_);
  for (int i = 0; i < dim(); ++i)
    for (int c = 0; c < cols_; ++c) A.at(i, c) = rows_[i][c];
  return A;
}

}  // namespace mq
