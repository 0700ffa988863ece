#include "heisgeo/band_matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace heisgeo {

BandMatrix::BandMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1) {
  if (n < 1 || kl < 0 || ku < 0 || kl >= n || ku >= n) {
    throw std::invalid_argument("BandMatrix: bad dimensions");
  }
  a_.assign(static_cast<std::size_t>(ldab_) * n_, 0.0);
  ipiv_.assign(n_, 0);
}

int BandMatrix::row_index(int i, int j) const {
  // Storage row for A(i,j); the top kl rows are fill headroom.
  return kl_ + ku_ + i - j;
}

double& BandMatrix::at(int i, int j) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i - j > kl_ || j - i > ku_) {
    throw std::out_of_range("BandMatrix::at: outside the band");
  }
  return a_[static_cast<std::size_t>(j) * ldab_ + row_index(i, j)];
}

double BandMatrix::at(int i, int j) const {
  return const_cast<BandMatrix*>(this)->at(i, j);
}

void BandMatrix::factor() {
  // Banded Gaussian elimination with partial pivoting. After pivoting the
  // effective upper bandwidth grows to kl + ku, which the storage headroom
  // accommodates.
  const int width = kl_ + ku_;
  auto entry = [this](int i, int j) -> double& {
    return a_[static_cast<std::size_t>(j) * ldab_ + kl_ + ku_ + i - j];
  };

  for (int k = 0; k < n_; ++k) {
    const int lm = std::min(kl_, n_ - 1 - k);
    // Pivot search in column k, rows k .. k+lm.
    int piv = k;
    double piv_abs = std::fabs(entry(k, k));
    for (int i = k + 1; i <= k + lm; ++i) {
      const double v = std::fabs(entry(i, k));
      if (v > piv_abs) {
        piv_abs = v;
        piv = i;
      }
    }
    if (piv_abs == 0.0) {
      throw SingularSystemError("BandMatrix::factor: zero pivot column " +
                                std::to_string(k));
    }
    ipiv_[k] = piv;
    const int jmax = std::min(n_ - 1, k + width);
    if (piv != k) {
      for (int j = k; j <= jmax; ++j) {
        std::swap(entry(k, j), entry(piv, j));
      }
    }
    const double pivot = entry(k, k);
    for (int i = k + 1; i <= k + lm; ++i) {
      const double mult = entry(i, k) / pivot;
      entry(i, k) = mult;  // store the multiplier in place
      if (mult != 0.0) {
        for (int j = k + 1; j <= jmax; ++j) {
          entry(i, j) -= mult * entry(k, j);
        }
      }
    }
  }
  factored_ = true;
}

void BandMatrix::solve(std::span<double> b) const {
  if (!factored_) {
    throw std::logic_error("BandMatrix::solve: factor() has not been called");
  }
  if (static_cast<int>(b.size()) != n_) {
    throw std::invalid_argument("BandMatrix::solve: size mismatch");
  }
  auto entry = [this](int i, int j) -> double {
    return a_[static_cast<std::size_t>(j) * ldab_ + kl_ + ku_ + i - j];
  };

  // Forward substitution with the stored multipliers and row swaps.
  for (int k = 0; k < n_; ++k) {
    const int lm = std::min(kl_, n_ - 1 - k);
    if (ipiv_[k] != k) std::swap(b[k], b[ipiv_[k]]);
    for (int i = k + 1; i <= k + lm; ++i) {
      b[i] -= entry(i, k) * b[k];
    }
  }
  // Back substitution on the banded U.
  const int width = kl_ + ku_;
  for (int k = n_ - 1; k >= 0; --k) {
    b[k] /= entry(k, k);
    const int imin = std::max(0, k - width);
    for (int i = imin; i < k; ++i) {
      b[i] -= entry(i, k) * b[k];
    }
  }
}

}  // namespace heisgeo
