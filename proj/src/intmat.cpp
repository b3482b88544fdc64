#include "gpcalc/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace gpc {

long bareiss_rank(IntMat m) {
  long rank = 0;
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = c; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        mpz_class t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
    ++rank;
  }
  return rank;
}

IntMat transpose(const IntMat& m) {
  IntMat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

IntMat matmul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  IntMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const mpz_class& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) != 0) out.at(i, j) += v * y.at(k, j);
      }
    }
  }
  return out;
}

IntMat hstack(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack shape mismatch");
  IntMat out(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y.at(i, j);
  }
  return out;
}

bool is_zero(const IntMat& m) {
  for (const auto& v : m.a)
    if (v != 0) return false;
  return true;
}

}  // namespace gpc
