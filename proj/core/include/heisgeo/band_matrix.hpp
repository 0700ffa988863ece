#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace heisgeo {

class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

// Square band matrix with kl sub- and ku superdiagonals, LAPACK-style band
// storage with kl extra rows of headroom for pivoting fill. Entries outside
// the band are structurally zero.
class BandMatrix {
 public:
  BandMatrix(int n, int kl, int ku);

  int n() const { return n_; }
  int kl() const { return kl_; }
  int ku() const { return ku_; }

  // Access A(i,j); |i-j| must lie within the band.
  double& at(int i, int j);
  double at(int i, int j) const;

  // In-place LU with partial pivoting. Throws SingularSystemError on an
  // exactly singular pivot. After factorization at() is no longer
  // meaningful; only solve() may be used.
  void factor();

  // Solves A x = b using the stored factorization, overwriting b.
  void solve(std::span<double> b) const;

  bool factored() const { return factored_; }

 private:
  int row_index(int i, int j) const;  // band-storage row of A(i,j)

  int n_, kl_, ku_;
  int ldab_;               // rows of band storage = 2*kl + ku + 1
  std::vector<double> a_;  // column-major: a_[j*ldab + row]
  std::vector<int> ipiv_;
  bool factored_ = false;
};

}  // namespace heisgeo
