#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qosc {

/// Real symmetric tridiagonal matrix. Eigenvalues by Sturm-count bisection,
/// eigenvectors by inverse iteration.
template <typename Scalar>
class SymmetricTridiagonal {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SymmetricTridiagonal(Vector diagonal, Vector off_diagonal)
      : diag_(std::move(diagonal)), off_(std::move(off_diagonal)) {
    if (diag_.size() < 1 || off_.size() != diag_.size() - 1) {
      throw std::invalid_argument("SymmetricTridiagonal: off-diagonal must have size n-1");
    }
    pivmin_ = std::numeric_limits<Scalar>::min();
    for (Eigen::Index i = 0; i < off_.size(); ++i) pivmin_ = std::max(pivmin_, off_[i] * off_[i]);
    pivmin_ *= std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    pivmin_ = std::max(pivmin_, std::numeric_limits<Scalar>::min());
  }

  Eigen::Index size() const { return diag_.size(); }
  const Vector& diagonal() const { return diag_; }
  const Vector& off_diagonal() const { return off_; }

  /// Number of eigenvalues strictly below lambda (negative pivots of T - lambda I).
  Eigen::Index count_below(Scalar lambda) const {
    Eigen::Index count = 0;
    Scalar q = diag_[0] - lambda;
    if (std::abs(q) < pivmin_) q = -pivmin_;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < size(); ++i) {
      q = diag_[i] - lambda - off_[i - 1] * off_[i - 1] / q;
      if (std::abs(q) < pivmin_) q = -pivmin_;
      if (q < 0) ++count;
    }
    return count;
  }

  /// Gershgorin enclosure of the spectrum.
  std::pair<Scalar, Scalar> gershgorin() const {
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::lowest();
    for (Eigen::Index i = 0; i < size(); ++i) {
      Scalar r = 0;
      if (i > 0) r += std::abs(off_[i - 1]);
      if (i + 1 < size()) r += std::abs(off_[i]);
      lo = std::min(lo, diag_[i] - r);
      hi = std::max(hi, diag_[i] + r);
    }
    return {lo, hi};
  }

  /// k-th smallest eigenvalue (0-based), bisected to full working precision.
  Scalar eigenvalue(Eigen::Index k) const {
    if (k < 0 || k >= size()) throw std::out_of_range("SymmetricTridiagonal::eigenvalue: index out of range");
    auto [lo, hi] = gershgorin();
    const Scalar pad = std::numeric_limits<Scalar>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + pivmin_;
    lo -= pad;
    hi += pad;
    for (int it = 0; it < 200; ++it) {
      const Scalar mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (count_below(mid) > k) hi = mid; else lo = mid;
    }
    return lo + (hi - lo) / 2;
  }

  /// The k smallest eigenvalues, increasing.
  std::vector<Scalar> lowest_eigenvalues(Eigen::Index k) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) out.push_back(eigenvalue(j));
    return out;
  }

  /// All eigenvalues in the half-open window [lo, hi).
  std::vector<Scalar> eigenvalues_in(Scalar lo, Scalar hi) const {
    std::vector<Scalar> out;
    for (Eigen::Index j = count_below(lo); j < count_below(hi); ++j) out.push_back(eigenvalue(j));
    return out;
  }

  /// Unit-norm eigenvector for an (accurate) eigenvalue, by inverse iteration
  /// with a partially pivoted tridiagonal LU.
  Vector eigenvector(Scalar lambda, int iterations = 3) const {
    const Eigen::Index n = size();
    const Scalar scale = std::max(std::abs(gershgorin().first), std::abs(gershgorin().second));
    const Scalar shift = lambda + 4 * std::numeric_limits<Scalar>::epsilon() * scale;

    // LU of T - shift I; rows may swap, giving a second superdiagonal u2.
    Vector l(n), u0(n), u1(n), u2(n);
    std::vector<bool> swapped(static_cast<std::size_t>(n), false);
    u0 = diag_.array() - shift;
    u1.setZero();
    u2.setZero();
    for (Eigen::Index i = 0; i + 1 < n; ++i) u1[i] = off_[i];
    Vector sub = off_;  // sub-diagonal entries of the working matrix
    l.setZero();
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (std::abs(u0[i]) >= std::abs(sub[i])) {
        const Scalar piv = u0[i] != 0 ? u0[i] : pivmin_;
        u0[i] = piv;
        l[i] = sub[i] / piv;
        u0[i + 1] -= l[i] * u1[i];
      } else {
        // Swap rows i and i+1.
        swapped[static_cast<std::size_t>(i)] = true;
        l[i] = u0[i] / sub[i];
        u0[i] = sub[i];
        const Scalar next_diag = u0[i + 1];
        const Scalar old_u1 = u1[i];
        u1[i] = next_diag;
        u0[i + 1] = old_u1 - l[i] * next_diag;
        if (i + 2 < n) {
          u2[i] = u1[i + 1];
          u1[i + 1] = -l[i] * u1[i + 1];
        }
      }
    }
    if (u0[n - 1] == 0) u0[n - 1] = pivmin_;

    Vector x = Vector::Ones(n);
    for (int it = 0; it < iterations; ++it) {
      // Forward: apply row swaps and L^{-1}.
      for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (swapped[static_cast<std::size_t>(i)]) std::swap(x[i], x[i + 1]);
        x[i + 1] -= l[i] * x[i];
      }
      // Back substitution with U.
      for (Eigen::Index i = n - 1; i >= 0; --i) {
        Scalar v = x[i];
        if (i + 1 < n) v -= u1[i] * x[i + 1];
        if (i + 2 < n) v -= u2[i] * x[i + 2];
        x[i] = v / u0[i];
      }
      x /= x.norm();
    }
    // Deterministic sign: largest-magnitude component positive.
    Eigen::Index imax = 0;
    x.cwiseAbs().maxCoeff(&imax);
    if (x[imax] < 0) x = -x;
    return x;
  }

 private:
  Vector diag_;
  Vector off_;
  Scalar pivmin_;
};

}  // namespace qosc
