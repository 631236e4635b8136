#include "mpa/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpa {
namespace {

constexpr std::ptrdiff_t kMaxDimension = 10'000'000;

std::ptrdiff_t stride(std::size_t mode, int cutoff) {
  std::ptrdiff_t s = 1;
  for (std::size_t k = 0; k < mode; ++k) s *= cutoff + 1;
  return s;
}

bool below_boundary(std::ptrdiff_t index, std::size_t modes, int cutoff) {
  for (std::size_t k = 0; k < modes; ++k) {
    if (index % (cutoff + 1) == cutoff) return false;
    index /= cutoff + 1;
  }
  return true;
}

/// max_r |(C - expected I) e_col| over interior columns.
double max_deviation(const SparseMatrix& commutator, double expected, std::size_t modes,
                     int cutoff) {
  double worst = 0.0;
  for (std::ptrdiff_t col = 0; col < commutator.outerSize(); ++col) {
    if (!below_boundary(col, modes, cutoff)) continue;
    bool diagonal_seen = false;
    for (SparseMatrix::InnerIterator it(commutator, col); it; ++it) {
      double value = it.value();
      if (it.row() == col) {
        value -= expected;
        diagonal_seen = true;
      }
      worst = std::max(worst, std::abs(value));
    }
    if (!diagonal_seen) worst = std::max(worst, std::abs(expected));
  }
  return worst;
}

}  // namespace

ModeLattice::ModeLattice(std::vector<ModeLabel> modes, double cell_volume)
    : modes_(std::move(modes)), cell_volume_(cell_volume) {
  if (!(cell_volume_ > 0.0) || !std::isfinite(cell_volume_)) {
    throw std::invalid_argument("cell_volume must be > 0");
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    for (std::size_t j = i + 1; j < modes_.size(); ++j) {
      if (modes_[i] == modes_[j]) throw std::invalid_argument("mode labels must be unique");
    }
  }
}

ModeLattice ModeLattice::line(std::size_t count, double cell_volume) {
  std::vector<ModeLabel> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back({static_cast<int>(i), 0});
  return {std::move(labels), cell_volume};
}

std::ptrdiff_t fock_dimension(std::size_t modes, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  std::ptrdiff_t dim = 1;
  for (std::size_t k = 0; k < modes; ++k) {
    dim *= cutoff + 1;
    if (dim > kMaxDimension) throw std::length_error("truncated Fock space too large");
  }
  return dim;
}

std::vector<int> occupations(std::ptrdiff_t index, std::size_t modes, int cutoff) {
  std::vector<int> n(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    n[k] = static_cast<int>(index % (cutoff + 1));
    index /= cutoff + 1;
  }
  return n;
}

FockOperator build_ladder(const ModeLattice& lattice, std::size_t mode_index, LadderKind kind,
                          int cutoff) {
  if (mode_index >= lattice.size()) throw std::out_of_range("mode index out of range");
  const std::size_t modes = lattice.size();
  const std::ptrdiff_t dim = fock_dimension(modes, cutoff);
  const std::ptrdiff_t s = stride(mode_index, cutoff);
  const double scale = 1.0 / std::sqrt(lattice.cell_volume());

  std::vector<Eigen::Triplet<double, std::ptrdiff_t>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (std::ptrdiff_t col = 0; col < dim; ++col) {
    const int n = static_cast<int>((col / s) % (cutoff + 1));
    if (kind == LadderKind::Annihilate && n > 0) {
      // b |n> = sqrt(n) |n-1>
      entries.emplace_back(col - s, col, scale * std::sqrt(static_cast<double>(n)));
    } else if (kind == LadderKind::Create && n < cutoff) {
      // b^dagger |n> = sqrt(n+1) |n+1>
      entries.emplace_back(col + s, col, scale * std::sqrt(static_cast<double>(n + 1)));
    }
  }

  FockOperator op;
  op.cutoff = cutoff;
  op.mode_count = modes;
  op.matrix.resize(dim, dim);
  op.matrix.setFromTriplets(entries.begin(), entries.end());
  return op;
}

FockOperator number_operator(const ModeLattice& lattice, std::size_t mode_index, int cutoff) {
  const FockOperator create = build_ladder(lattice, mode_index, LadderKind::Create, cutoff);
  const FockOperator annihilate = build_ladder(lattice, mode_index, LadderKind::Annihilate, cutoff);
  FockOperator op = create;
  op.matrix = SparseMatrix(create.matrix * annihilate.matrix);
  return op;
}

CommutatorReport commutator_check(const ModeLattice& lattice, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("commutator check needs cutoff >= 2");
  const std::size_t modes = lattice.size();

  std::vector<SparseMatrix> down, up;
  for (std::size_t i = 0; i < modes; ++i) {
    down.push_back(build_ladder(lattice, i, LadderKind::Annihilate, cutoff).matrix);
    up.push_back(build_ladder(lattice, i, LadderKind::Create, cutoff).matrix);
  }

  CommutatorReport report;
  report.subspace_dim = fock_dimension(modes, cutoff - 1);
  if (modes == 0) report.subspace_dim = 1;

  const double inv_volume = 1.0 / lattice.cell_volume();
  for (std::size_t i = 0; i < modes; ++i) {
    for (std::size_t j = 0; j < modes; ++j) {
      const SparseMatrix mixed = SparseMatrix(down[i] * up[j]) - SparseMatrix(up[j] * down[i]);
      const SparseMatrix lowers = SparseMatrix(down[i] * down[j]) - SparseMatrix(down[j] * down[i]);
      const SparseMatrix raises = SparseMatrix(up[i] * up[j]) - SparseMatrix(up[j] * up[i]);
      report.max_deviation = std::max({report.max_deviation,
                                       max_deviation(mixed, i == j ? inv_volume : 0.0, modes, cutoff),
                                       max_deviation(lowers, 0.0, modes, cutoff),
                                       max_deviation(raises, 0.0, modes, cutoff)});
    }
  }
  return report;
}

}  // namespace mpa
