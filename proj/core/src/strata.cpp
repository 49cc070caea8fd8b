#include "csmlat/strata.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace csmlat {

namespace {

int g_max_dimension = 20;

void check_lattice_vector(const LatticeVector& v) {
  if (v.size() < 2 || !std::has_single_bit(v.size())) {
    throw std::invalid_argument(
        "lattice vector must have 2^(n+1) entries for some n >= 0");
  }
  if (sgn(v[0]) != 0) {
    throw std::invalid_argument(
        "lattice vector entry for the empty set must be zero");
  }
}

}  // namespace

AmbientSpace::AmbientSpace(int dim) : dim_(dim) {
  if (dim < 0) {
    throw std::invalid_argument("projective dimension must be nonnegative");
  }
  if (dim > g_max_dimension) {
    throw std::invalid_argument("projective dimension " + std::to_string(dim) +
                                " exceeds the configured cap " +
                                std::to_string(g_max_dimension));
  }
}

int AmbientSpace::max_dimension() { return g_max_dimension; }

void AmbientSpace::set_max_dimension(int value) {
  // Masks are 32-bit; n+1 set bits must fit.
  if (value < 0 || value > 30) {
    throw std::invalid_argument("ambient dimension cap must be in [0, 30]");
  }
  g_max_dimension = value;
}

StratumSet::StratumSet(AmbientSpace ambient, std::uint32_t mask)
    : ambient_(ambient), mask_(mask) {
  if (mask == 0) {
    throw std::invalid_argument("stratum set must be nonempty");
  }
  if (mask > ambient.full_mask()) {
    throw std::invalid_argument("stratum set has indices outside 0..n");
  }
}

StratumSet StratumSet::from_indices(AmbientSpace ambient,
                                    const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i > ambient.dim()) {
      throw std::invalid_argument("stratum index " + std::to_string(i) +
                                  " outside 0.." +
                                  std::to_string(ambient.dim()));
    }
    mask |= std::uint32_t{1} << i;
  }
  return StratumSet(ambient, mask);
}

int StratumSet::size() const { return std::popcount(mask_); }

bool StratumSet::contains(int index) const {
  return index >= 0 && index <= ambient_.dim() &&
         (mask_ & (std::uint32_t{1} << index)) != 0;
}

std::vector<int> StratumSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 0; i <= ambient_.dim(); ++i) {
    if (mask_ & (std::uint32_t{1} << i)) {
      out.push_back(i);
    }
  }
  return out;
}

bool operator<(const StratumSet& a, const StratumSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask_ < b.mask_;
}

int orbit_dimension(const StratumSet& s) { return s.dimension(); }

std::vector<StratumSet> strata_of_dimension(AmbientSpace ambient, int k) {
  if (k < 0 || k > ambient.dim()) {
    throw std::out_of_range("stratum dimension " + std::to_string(k) +
                            " outside 0.." + std::to_string(ambient.dim()));
  }
  std::vector<StratumSet> out;
  const int want = k + 1;
  for (std::uint32_t mask = 1; mask <= ambient.full_mask(); ++mask) {
    if (std::popcount(mask) == want) {
      out.emplace_back(ambient, mask);
    }
  }
  return out;
}

std::vector<StratumSet> all_strata(AmbientSpace ambient) {
  // Single pass bucketed by size keeps the canonical (size, mask) order.
  std::vector<std::vector<std::uint32_t>> buckets(ambient.coord_count() + 1);
  for (std::uint32_t mask = 1; mask <= ambient.full_mask(); ++mask) {
    buckets[std::popcount(mask)].push_back(mask);
  }
  std::vector<StratumSet> out;
  out.reserve(ambient.lattice_size() - 1);
  for (int s = 1; s <= ambient.coord_count(); ++s) {
    for (std::uint32_t mask : buckets[s]) {
      out.emplace_back(ambient, mask);
    }
  }
  return out;
}

LatticeVector zeta_transform(const LatticeVector& v) {
  check_lattice_vector(v);
  LatticeVector out = v;
  const std::size_t size = out.size();
  const int bits = std::countr_zero(size);
  for (int d = 0; d < bits; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t s = 0; s < size; ++s) {
      if ((s & bit) && sgn(out[s ^ bit]) != 0) {
        out[s] += out[s ^ bit];
      }
    }
  }
  return out;
}

LatticeVector moebius_transform(const LatticeVector& v) {
  check_lattice_vector(v);
  LatticeVector out = v;
  const std::size_t size = out.size();
  const int bits = std::countr_zero(size);
  for (int d = 0; d < bits; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t s = 0; s < size; ++s) {
      if ((s & bit) && sgn(out[s ^ bit]) != 0) {
        out[s] -= out[s ^ bit];
      }
    }
  }
  return out;
}

LatticeVector zeta_superset_transform(const LatticeVector& v) {
  check_lattice_vector(v);
  LatticeVector out = v;
  const std::size_t size = out.size();
  const int bits = std::countr_zero(size);
  for (int d = 0; d < bits; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t s = 0; s < size; ++s) {
      if (!(s & bit) && sgn(out[s | bit]) != 0) {
        out[s] += out[s | bit];
      }
    }
  }
  // The empty-set slot picks up the total; the lattice proper excludes it.
  out[0] = 0;
  return out;
}

LatticeVector moebius_superset_transform(const LatticeVector& v) {
  check_lattice_vector(v);
  LatticeVector out = v;
  const std::size_t size = out.size();
  const int bits = std::countr_zero(size);
  for (int d = 0; d < bits; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t s = 0; s < size; ++s) {
      if (!(s & bit) && sgn(out[s | bit]) != 0) {
        out[s] -= out[s | bit];
      }
    }
  }
  out[0] = 0;
  return out;
}

}  // namespace csmlat
