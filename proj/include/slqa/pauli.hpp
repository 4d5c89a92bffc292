#pragma once

// Weighted Pauli-string algebra compiled to dense matrices.
//
// Conventions used throughout: site 0 is the leftmost (most significant)
// tensor factor, so the bit of site j in basis index b is (b >> (n-1-j)) & 1.
// Y = [[0,-i],[i,0]], sigma_pm = (X +- iY)/2.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slqa {

using complexd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

enum class Axis { X, Y, Z };

inline char axis_name(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    default: return 'Z';
  }
}

struct PauliTerm {
  complexd coefficient;
  std::vector<std::pair<int, Axis>> factors;  // (site, axis); empty = identity
};

struct OperatorSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  OperatorSum() = default;
  explicit OperatorSum(int n) : n_qubits(n) {}

  OperatorSum& add(complexd coeff, std::vector<std::pair<int, Axis>> factors) {
    terms.push_back({coeff, std::move(factors)});
    return *this;
  }

  OperatorSum& operator+=(const OperatorSum& other) {
    if (other.n_qubits != n_qubits)
      throw std::invalid_argument("OperatorSum: qubit count mismatch in +=");
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
  }

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) {
    a += b;
    return a;
  }

  friend OperatorSum operator*(complexd scale, OperatorSum op) {
    for (auto& t : op.terms) t.coefficient *= scale;
    return op;
  }
};

inline constexpr int kDefaultQubitCap = 12;

// Dense 2^n x 2^n matrix of the sum.  Summation runs in listed term order so
// the result is bit-exact for a fixed term list.
inline MatrixXcd compile(const OperatorSum& op, int qubit_cap = kDefaultQubitCap) {
  const int n = op.n_qubits;
  if (n <= 0 || n > qubit_cap)
    throw std::invalid_argument("compile: n_qubits " + std::to_string(n) +
                                " outside (0, " + std::to_string(qubit_cap) + "]");
  const std::int64_t dim = std::int64_t{1} << n;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  const complexd iu(0.0, 1.0);
  for (const auto& term : op.terms) {
    std::uint64_t seen = 0;
    for (const auto& [site, axis] : term.factors) {
      (void)axis;
      if (site < 0 || site >= n)
        throw std::out_of_range("compile: site index " + std::to_string(site) +
                                " out of range for n=" + std::to_string(n));
      const std::uint64_t bit = std::uint64_t{1} << site;
      if (seen & bit)
        throw std::invalid_argument("compile: repeated site in one term");
      seen |= bit;
    }
    for (std::int64_t col = 0; col < dim; ++col) {
      std::int64_t row = col;
      complexd amp = term.coefficient;
      for (const auto& [site, axis] : term.factors) {
        const int shift = n - 1 - site;
        const int bit = (col >> shift) & 1;
        switch (axis) {
          case Axis::X:
            row ^= std::int64_t{1} << shift;
            break;
          case Axis::Y:
            row ^= std::int64_t{1} << shift;
            amp *= bit ? -iu : iu;
            break;
          case Axis::Z:
            if (bit) amp = -amp;
            break;
        }
      }
      out(row, col) += amp;
    }
  }
  return out;
}

// exp(-i*angle*sum_{sites} sigma_axis): per-site closed form
// cos(angle)*I - i*sin(angle)*sigma, tensored over all n sites.
inline MatrixXcd rotation_unitary(Axis axis, double angle, const std::vector<int>& sites,
                                  int n) {
  if (n <= 0 || n > kDefaultQubitCap)
    throw std::invalid_argument("rotation_unitary: bad qubit count");
  std::vector<bool> active(n, false);
  for (int s : sites) {
    if (s < 0 || s >= n) throw std::out_of_range("rotation_unitary: site out of range");
    active[s] = true;
  }
  const complexd iu(0.0, 1.0);
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2cd u;
  switch (axis) {
    case Axis::X:
      u << c, -iu * s, -iu * s, c;
      break;
    case Axis::Y:
      u << c, -s, s, c;
      break;
    case Axis::Z:
      u << c - iu * s, 0, 0, c + iu * s;
      break;
  }
  const std::int64_t dim = std::int64_t{1} << n;
  MatrixXcd out(dim, dim);
  for (std::int64_t row = 0; row < dim; ++row) {
    for (std::int64_t col = 0; col < dim; ++col) {
      complexd amp(1.0, 0.0);
      for (int j = 0; j < n && amp != complexd(0.0, 0.0); ++j) {
        const int rb = (row >> (n - 1 - j)) & 1;
        const int cb = (col >> (n - 1 - j)) & 1;
        if (active[j])
          amp *= u(rb, cb);
        else if (rb != cb)
          amp = 0.0;
      }
      out(row, col) = amp;
    }
  }
  return out;
}

inline MatrixXcd rotation_unitary(Axis axis, double angle, int n) {
  std::vector<int> all(n);
  for (int j = 0; j < n; ++j) all[j] = j;
  return rotation_unitary(axis, angle, all, n);
}

// Product of two-qubit SWAPs over disjoint pairs, as a Pauli sum:
// SWAP_{jk} = (I + XX + YY + ZZ)/2, expanded so compile() gives the exact
// permutation matrix.  Hermitian, unitary, an involution.
inline OperatorSum swap_product(const std::vector<std::pair<int, int>>& pairs, int n) {
  std::vector<bool> used(n, false);
  for (const auto& [j, k] : pairs) {
    if (j < 0 || j >= n || k < 0 || k >= n || j == k)
      throw std::invalid_argument("swap_product: invalid pair");
    if (used[j] || used[k]) throw std::invalid_argument("swap_product: overlapping pairs");
    used[j] = used[k] = true;
  }
  const int np = static_cast<int>(pairs.size());
  OperatorSum op(n);
  const double w = std::pow(0.5, np);
  std::int64_t choices = 1;
  for (int i = 0; i < np; ++i) choices *= 4;
  for (std::int64_t c = 0; c < choices; ++c) {
    PauliTerm term{complexd(w, 0.0), {}};
    std::int64_t rem = c;
    for (const auto& [j, k] : pairs) {
      const int pick = rem & 3;  // 0 = identity, 1..3 = X,Y,Z on both sites
      rem >>= 2;
      if (pick) {
        const Axis a = pick == 1 ? Axis::X : pick == 2 ? Axis::Y : Axis::Z;
        term.factors.emplace_back(j, a);
        term.factors.emplace_back(k, a);
      }
    }
    op.terms.push_back(std::move(term));
  }
  return op;
}

// Frobenius distance from Hermiticity; 0 for exactly Hermitian input.
inline double hermiticity_residual(const MatrixXcd& m) {
  return (m - m.adjoint()).norm();
}

}  // namespace slqa
