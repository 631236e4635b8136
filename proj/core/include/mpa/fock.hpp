#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

namespace mpa {

/// One lattice cell of (momentum, acceleration) space.
struct ModeLabel {
  int p_cell = 0;
  int a_cell = 0;
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Finite set of modes. Continuum deltas delta^3(p - p') delta^3(a - a')
/// become delta_ij / cell_volume, with cell_volume = Delta^3 p Delta^3 a.
class ModeLattice {
 public:
  ModeLattice(std::vector<ModeLabel> modes, double cell_volume);

  /// `count` modes labelled (i, 0).
  static ModeLattice line(std::size_t count, double cell_volume = 1.0);

  const std::vector<ModeLabel>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  double cell_volume() const { return cell_volume_; }

 private:
  std::vector<ModeLabel> modes_;
  double cell_volume_;
};

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, std::ptrdiff_t>;

/// Operator on the occupation basis truncated at `cutoff` quanta per mode.
/// Basis index = sum_k n_k (cutoff+1)^k.
struct FockOperator {
  SparseMatrix matrix;
  int cutoff = 0;
  std::size_t mode_count = 0;

  std::ptrdiff_t dimension() const { return matrix.rows(); }
};

enum class LadderKind { Create, Annihilate };

/// Basis size (cutoff+1)^modes; throws std::length_error past ~1e7.
std::ptrdiff_t fock_dimension(std::size_t modes, int cutoff);

/// Occupation numbers of a basis index.
std::vector<int> occupations(std::ptrdiff_t index, std::size_t modes, int cutoff);

/// b_i or b_i^dagger on mode `mode_index`, identity on the other factors,
/// scaled by cell_volume^{-1/2} so [b_i, b_i^dagger] = 1/cell_volume below
/// the cutoff.
FockOperator build_ladder(const ModeLattice& lattice, std::size_t mode_index, LadderKind kind,
                          int cutoff);

/// b_i^dagger b_i.
FockOperator number_operator(const ModeLattice& lattice, std::size_t mode_index, int cutoff);

struct CommutatorReport {
  double max_deviation = 0.0;
  /// States with every occupation <= cutoff - 1.
  std::ptrdiff_t subspace_dim = 0;
};

/// Checks [b_i, b_j^dagger] = delta_ij / V, [b_i, b_j] = 0 and
/// [b_i^dagger, b_j^dagger] = 0 for every ordered mode pair, applied to the
/// basis states below the truncation boundary.
CommutatorReport commutator_check(const ModeLattice& lattice, int cutoff);

}  // namespace mpa
