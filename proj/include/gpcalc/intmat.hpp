#pragma once

// Dense integer matrices with fraction-free (Bareiss) elimination. Sizes stay
// in the low hundreds here, so simplicity beats sparsity.

#include <gmpxx.h>

#include <vector>

namespace gpc {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

long bareiss_rank(IntMat m);  // consumes its copy
IntMat transpose(const IntMat& m);
IntMat matmul(const IntMat& x, const IntMat& y);
IntMat hstack(const IntMat& x, const IntMat& y);
bool is_zero(const IntMat& m);

}  // namespace gpc
