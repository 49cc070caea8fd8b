#include "csmlat/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace csmlat {

void SubcategorySpec::validate() const {
  if (max_ambient < 0) {
    throw std::invalid_argument("subcategory needs max_ambient >= 0");
  }
  if (cap < 0 || max_ambient > cap) {
    throw std::invalid_argument(
        "max_ambient " + std::to_string(max_ambient) +
        " exceeds the solver cap " + std::to_string(cap) +
        " (exact elimination cost)");
  }
  for (long d : power_degrees) {
    if (d < 2) {
      throw std::invalid_argument("solver power degrees must be >= 2");
    }
  }
}

UnknownIndex::UnknownIndex(int max_ambient) : max_ambient_(max_ambient) {
  if (max_ambient < 0) {
    throw std::invalid_argument("unknown index needs max_ambient >= 0");
  }
  object_offset_.resize(max_ambient + 1, 0);
  stratum_rank_.resize(max_ambient + 1);
  for (int m = 0; m <= max_ambient; ++m) {
    object_offset_[m] = static_cast<int>(keys_.size());
    AmbientSpace space(m);
    stratum_rank_[m].assign(space.lattice_size(), -1);
    int rank = 0;
    for (const StratumSet& s : all_strata(space)) {
      stratum_rank_[m][s.mask()] = rank++;
      for (int degree = 0; degree <= m; ++degree) {
        keys_.push_back(Key{m, s.mask(), degree});
      }
    }
  }
}

int UnknownIndex::column(int object_dim, std::uint32_t stratum_mask,
                         int degree) const {
  if (object_dim < 0 || object_dim > max_ambient_) {
    throw std::out_of_range("object dimension outside the subcategory");
  }
  if (degree < 0 || degree > object_dim) {
    throw std::out_of_range("degree outside 0..m");
  }
  const std::vector<int>& ranks = stratum_rank_[object_dim];
  if (stratum_mask == 0 || stratum_mask >= ranks.size() ||
      ranks[stratum_mask] < 0) {
    throw std::out_of_range("stratum outside the object's lattice");
  }
  return object_offset_[object_dim] +
         ranks[stratum_mask] * (object_dim + 1) + degree;
}

TransformationSystem::TransformationSystem(SubcategorySpec spec,
                                           UnknownIndex index)
    : spec_(std::move(spec)), index_(std::move(index)) {}

std::size_t TransformationSystem::constraint_count(GeneratorKind kind) const {
  return counts_[static_cast<int>(kind)];
}

void TransformationSystem::add_row(SparseQVector row, RowProvenance prov) {
  counts_[static_cast<int>(prov.kind)] += 1;
  rows_.push_back(std::move(row));
  provenance_.push_back(std::move(prov));
}

namespace {

// Emits the naturality block for one (generator map, orbit indicator): one
// row per homology degree of the target object, expanded in the unknowns.
void emit_block(TransformationSystem& system, const VarietyMap& map,
                GeneratorKind kind, const StratumSet& stratum) {
  const UnknownIndex& index = system.index();
  const int source_dim = map.source().dim();
  const int target_dim = map.target().dim();

  // Left side: tau(f_* 1_{O_S}) expanded over the pushed orbit coefficients.
  const ConstructibleFunction pushed =
      pushforward_cf(map, indicator_orbit(stratum));

  // Right side: f_* tau(1_{O_S}); the action on each basis class is read off
  // from the homology pushforward itself.
  std::vector<HomologyClass> pushed_basis;
  pushed_basis.reserve(source_dim + 1);
  for (int l = 0; l <= source_dim; ++l) {
    HomologyClass basis(map.source());
    basis[l] = 1;
    pushed_basis.push_back(pushforward_homology(map, basis));
  }

  for (int degree = 0; degree <= target_dim; ++degree) {
    SparseQVector row;
    for (std::uint32_t t = 1; t <= map.target().full_mask(); ++t) {
      const Rational& c = pushed.orbit_coeffs()[t];
      if (sgn(c) != 0) {
        row.emplace_back(index.column(target_dim, t, degree), c);
      }
    }
    for (int l = 0; l <= source_dim; ++l) {
      const Rational& c = pushed_basis[l][degree];
      if (sgn(c) != 0) {
        row.emplace_back(index.column(source_dim, stratum.mask(), l), -c);
      }
    }
    // Merge duplicate columns (power maps hit the same unknown twice).
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseQVector merged;
    for (auto& [col, value] : row) {
      if (!merged.empty() && merged.back().first == col) {
        merged.back().second += value;
      } else {
        merged.emplace_back(col, value);
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) {
                                  return sgn(e.second) == 0;
                                }),
                 merged.end());
    if (merged.empty()) continue;  // vacuous row
    system.add_row(std::move(merged),
                   RowProvenance{kind, map.descriptor(), source_dim,
                                 stratum.mask(), degree});
  }
}

ZMatrix csm_restriction_lattice(const UnknownIndex& index) {
  ZMatrix rows;
  for (int i = 0; i <= index.max_ambient(); ++i) {
    const QVector flat = csm_restriction(index.max_ambient(), i).flatten(index);
    ZVector row(flat.size());
    for (std::size_t j = 0; j < flat.size(); ++j) {
      row[j] = flat[j].get_num();  // entries are 0/1
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TransformationSystem assemble(const SubcategorySpec& spec) {
  spec.validate();
  TransformationSystem system(spec, UnknownIndex(spec.max_ambient));

  for (int m = 0; m <= spec.max_ambient; ++m) {
    AmbientSpace space(m);
    const std::vector<StratumSet> strata = all_strata(space);

    for (long d : spec.power_degrees) {
      const VarietyMap map = VarietyMap::power(space, d);
      for (const StratumSet& s : strata) {
        emit_block(system, map, GeneratorKind::Power, s);
      }
    }

    if (spec.include_inclusions && m >= 1) {
      AmbientSpace smaller(m - 1);
      const std::vector<StratumSet> small_strata = all_strata(smaller);
      for (int omit = 0; omit <= m; ++omit) {
        std::vector<int> image(m);
        for (int i = 0; i < m; ++i) {
          image[i] = (i < omit) ? i : i + 1;
        }
        const VarietyMap map =
            VarietyMap::inclusion(smaller, space, std::move(image));
        for (const StratumSet& s : small_strata) {
          emit_block(system, map, GeneratorKind::Inclusion, s);
        }
      }
    }

    if (spec.include_permutations && m >= 1) {
      for (int t = 0; t < m; ++t) {
        std::vector<int> image(m + 1);
        for (int i = 0; i <= m; ++i) image[i] = i;
        std::swap(image[t], image[t + 1]);
        const VarietyMap map = VarietyMap::permutation(space, std::move(image));
        for (const StratumSet& s : strata) {
          emit_block(system, map, GeneratorKind::Permutation, s);
        }
      }
    }
  }
  return system;
}

CandidateTransformation::CandidateTransformation(int max_ambient)
    : max_ambient_(max_ambient) {
  if (max_ambient < 0) {
    throw std::invalid_argument("candidate needs max_ambient >= 0");
  }
  values_.reserve(max_ambient + 1);
  for (int m = 0; m <= max_ambient; ++m) {
    AmbientSpace space(m);
    values_.emplace_back(space.lattice_size(), HomologyClass(space));
  }
}

const HomologyClass& CandidateTransformation::value(
    int object_dim, std::uint32_t stratum_mask) const {
  if (object_dim < 0 || object_dim > max_ambient_) {
    throw std::out_of_range("object dimension outside the subcategory");
  }
  if (stratum_mask == 0 ||
      stratum_mask >= values_[object_dim].size()) {
    throw std::out_of_range("stratum outside the object's lattice");
  }
  return values_[object_dim][stratum_mask];
}

HomologyClass& CandidateTransformation::value(int object_dim,
                                              std::uint32_t stratum_mask) {
  const CandidateTransformation& self = *this;
  return const_cast<HomologyClass&>(self.value(object_dim, stratum_mask));
}

HomologyClass CandidateTransformation::apply(
    const ConstructibleFunction& f) const {
  const int m = f.ambient().dim();
  if (m > max_ambient_) {
    throw std::invalid_argument("function lives outside the subcategory");
  }
  HomologyClass out(f.ambient());
  for (std::uint32_t s = 1; s <= f.ambient().full_mask(); ++s) {
    const Rational& c = f.orbit_coeffs()[s];
    if (sgn(c) != 0) {
      out += c * values_[m][s];
    }
  }
  return out;
}

QVector CandidateTransformation::flatten(const UnknownIndex& index) const {
  if (index.max_ambient() != max_ambient_) {
    throw std::invalid_argument("index and candidate cover different objects");
  }
  QVector out(index.columns(), Rational(0));
  for (std::size_t col = 0; col < index.columns(); ++col) {
    const UnknownIndex::Key& key = index.key(static_cast<int>(col));
    out[col] = values_[key.object_dim][key.stratum_mask][key.degree];
  }
  return out;
}

CandidateTransformation CandidateTransformation::from_vector(
    const UnknownIndex& index, const QVector& v) {
  if (v.size() != index.columns()) {
    throw std::invalid_argument("vector width does not match the index");
  }
  CandidateTransformation out(index.max_ambient());
  for (std::size_t col = 0; col < v.size(); ++col) {
    if (sgn(v[col]) != 0) {
      const UnknownIndex::Key& key = index.key(static_cast<int>(col));
      out.value(key.object_dim, key.stratum_mask)[key.degree] = v[col];
    }
  }
  return out;
}

bool operator==(const CandidateTransformation& a,
                const CandidateTransformation& b) {
  return a.max_ambient_ == b.max_ambient_ && a.values_ == b.values_;
}

CandidateTransformation csm_restriction(int max_ambient, int i) {
  if (i < 0 || i > max_ambient) {
    throw std::out_of_range("csm restriction degree outside 0..N");
  }
  CandidateTransformation out(max_ambient);
  for (int m = i; m <= max_ambient; ++m) {
    AmbientSpace space(m);
    for (const StratumSet& s : strata_of_dimension(space, i)) {
      out.value(m, s.mask())[i] = 1;
    }
  }
  return out;
}

std::vector<CandidateTransformation> solve(
    const TransformationSystem& system) {
  RowReducer reducer(system.index().columns());
  for (const SparseQVector& row : system.rows()) {
    reducer.insert(row);
  }
  std::vector<CandidateTransformation> basis;
  for (const QVector& v : reducer.nullspace_basis()) {
    basis.push_back(CandidateTransformation::from_vector(system.index(), v));
  }
  return basis;
}

EigenvalueWitness verify_eigenvalue_vanishing(
    const CandidateTransformation& tau, int degree) {
  EigenvalueWitness w;
  w.degree = degree;
  if (degree < 0 || degree > tau.max_ambient()) {
    throw std::out_of_range("degree outside 0..N");
  }
  for (int m = 0; m <= tau.max_ambient(); ++m) {
    AmbientSpace space(m);
    for (int k = 0; k <= m; ++k) {
      if (k == degree) continue;
      const HomologyClass value = tau.apply(indicator_U(space, k));
      if (degree <= m && sgn(value[degree]) != 0) {
        w.failures.push_back(EigenvalueFailure{m, k, value[degree]});
      }
    }
  }
  w.pass = w.failures.empty();
  return w;
}

UniquenessReport uniqueness_report(const SubcategorySpec& spec) {
  UniquenessReport report;
  report.spec = spec;

  const TransformationSystem system = assemble(spec);
  report.unknown_count = system.index().columns();
  report.constraint_count = system.constraint_count();
  report.power_rows = system.constraint_count(GeneratorKind::Power);
  report.inclusion_rows = system.constraint_count(GeneratorKind::Inclusion);
  report.permutation_rows =
      system.constraint_count(GeneratorKind::Permutation);

  report.basis = solve(system);
  report.dimension = report.basis.size();
  report.expected_dimension = static_cast<std::size_t>(spec.max_ambient) + 1;
  if (report.dimension != report.expected_dimension) {
    report.failures.push_back(
        "solution dimension " + std::to_string(report.dimension) +
        " differs from expected " + std::to_string(report.expected_dimension));
  }

  // Span comparison against the CSM restrictions, both sides canonicalized.
  QMatrix solution_rows;
  for (const CandidateTransformation& tau : report.basis) {
    solution_rows.push_back(tau.flatten(system.index()));
  }
  QMatrix csm_rows;
  for (int i = 0; i <= spec.max_ambient; ++i) {
    csm_rows.push_back(
        csm_restriction(spec.max_ambient, i).flatten(system.index()));
  }
  report.span_equal =
      same_row_space(solution_rows, csm_rows, system.index().columns());
  if (!report.span_equal) {
    report.failures.push_back(
        "solution space differs from the span of the CSM components");
  }

  // Decompose each basis vector and verify the residual transformation
  // vanishes on every orbit indicator.
  for (std::size_t b = 0; b < report.basis.size(); ++b) {
    const CandidateTransformation& tau = report.basis[b];
    std::vector<HomologyClass> taus_on_spaces;
    for (int i = 0; i <= spec.max_ambient; ++i) {
      taus_on_spaces.push_back(tau.apply(indicator_space(AmbientSpace(i))));
    }
    const CsmDecomposition decomposition = decompose_into_csm(taus_on_spaces);
    report.csm_coefficients_of_basis.push_back(decomposition.coefficients);
    for (int m = 0; m <= spec.max_ambient; ++m) {
      AmbientSpace space(m);
      for (const StratumSet& s : all_strata(space)) {
        HomologyClass residual = tau.value(m, s.mask());
        const int dim = s.dimension();
        const Rational& r = decomposition.coefficients[dim];
        if (sgn(r) != 0) {
          residual[dim] -= r;  // r_dim * csm(1_{O_S}) = r_dim * [P^dim]
        }
        if (!residual.is_zero()) {
          report.failures.push_back(
              "basis vector " + std::to_string(b) +
              ": residual after CSM decomposition is nonzero on object P^" +
              std::to_string(m) + ", stratum mask " +
              std::to_string(s.mask()));
        }
      }
    }
  }

  report.pass = report.failures.empty();
  return report;
}

IntegralLatticeReport integral_lattice_report(const SubcategorySpec& spec) {
  spec.validate();
  if (spec.max_ambient > 3) {
    throw std::invalid_argument(
        "integral lattice experiment is capped at max_ambient 3");
  }
  const TransformationSystem system = assemble(spec);

  IntegralLatticeReport report;
  report.spec = spec;
  report.unknown_count = system.index().columns();

  // The assembled rows are integral by construction.
  ZMatrix rows;
  rows.reserve(system.rows().size());
  for (const SparseQVector& sparse : system.rows()) {
    ZVector row(system.index().columns(), Integer(0));
    for (const auto& [col, value] : sparse) {
      if (value.get_den() != 1) {
        throw std::logic_error("constraint row is not integral");
      }
      row[col] += value.get_num();
    }
    rows.push_back(std::move(row));
  }

  const ZMatrix kernel = integer_kernel_basis(rows, system.index().columns());
  report.lattice_rank = kernel.size();

  const ZMatrix kernel_form =
      hermite_normal_form(kernel, system.index().columns());
  const ZMatrix csm_form = hermite_normal_form(
      csm_restriction_lattice(system.index()), system.index().columns());
  report.spanned_by_csm = (kernel_form == csm_form);
  return report;
}

}  // namespace csmlat
