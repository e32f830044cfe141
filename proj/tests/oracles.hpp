// Independent reference computations used by the tests. Nothing here calls the
// library's arithmetic on Lie elements; matrices are dense and multiplied by hand.
#pragma once

#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

inline Dense zeros(int size) { return Dense(size, std::vector<Q>(size)); }

inline Dense unit(int size, int i, int j) {
  Dense m = zeros(size);
  m[i - 1][j - 1] = 1;
  return m;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense out(d, std::vector<Q>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Dense sub(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] -= b[i][j];
  }
  return out;
}

inline Dense commutator(const Dense& a, const Dense& b) { return sub(mul(a, b), mul(b, a)); }

inline Q trace(const Dense& a) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Basis of sl(size): all E_ij (i != j), then E_ii - E_{i+1,i+1}.
inline std::vector<Dense> sl_basis(int size) {
  std::vector<Dense> out;
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (i != j) out.push_back(unit(size, i, j));
    }
  }
  for (int i = 1; i < size; ++i) out.push_back(sub(unit(size, i, i), unit(size, i + 1, i + 1)));
  return out;
}

/// Coordinates of a traceless matrix in sl_basis.
inline std::vector<Q> sl_coords(const Dense& x) {
  const int size = static_cast<int>(x.size());
  std::vector<Q> out;
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (i != j) out.push_back(x[i - 1][j - 1]);
    }
  }
  Q partial = 0;
  for (int i = 1; i < size; ++i) {
    partial += x[i - 1][i - 1];
    out.push_back(partial);
  }
  return out;
}

/// tr(ad a ad b) from the ad-matrix columns.
inline Q killing(const Dense& a, const Dense& b) {
  const auto basis = sl_basis(static_cast<int>(a.size()));
  Q t = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto c = sl_coords(commutator(a, commutator(b, basis[k])));
    t += c[k];
  }
  return t;
}

/// B_k by the recurrence sum_{j<=k} C(k+1, j) B_j = 0.
inline std::vector<Q> bernoulli_table(int kmax) {
  std::vector<Q> B(kmax + 1);
  B[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    Q acc = 0;
    mpz_class binom = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      acc += Q(binom) * B[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    B[k] = -acc / Q(k + 1);
  }
  return B;
}

/// Number of multisets of size k from n kinds.
inline long multichoose(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
  return r.get_si();
}

}  // namespace oracle
