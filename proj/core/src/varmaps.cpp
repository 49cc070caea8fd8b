#include "csmlat/varmaps.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csmlat {

namespace {

void check_injection(const std::vector<int>& image, int source_coords,
                     int target_dim) {
  if (static_cast<int>(image.size()) != source_coords) {
    throw std::invalid_argument("injection must map every source coordinate");
  }
  std::uint32_t seen = 0;
  for (int t : image) {
    if (t < 0 || t > target_dim) {
      throw std::invalid_argument("injection image outside target 0..n");
    }
    const std::uint32_t bit = std::uint32_t{1} << t;
    if (seen & bit) {
      throw std::invalid_argument("injection must be injective");
    }
    seen |= bit;
  }
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = std::stol(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad integer '" + item +
                                  "' in map descriptor");
    }
    out.push_back(value);
  }
  if (out.empty()) {
    throw std::invalid_argument("empty integer list in map descriptor");
  }
  return out;
}

}  // namespace

VarietyMap::VarietyMap(Kind kind, AmbientSpace source, AmbientSpace target,
                       long degree, std::vector<int> image)
    : kind_(kind),
      source_(source),
      target_(target),
      degree_(degree),
      image_(std::move(image)) {}

VarietyMap VarietyMap::power(AmbientSpace space, long degree) {
  if (degree < 1) {
    throw std::invalid_argument("power map degree must be >= 1");
  }
  return VarietyMap(Kind::Power, space, space, degree, {});
}

VarietyMap VarietyMap::inclusion(AmbientSpace source, AmbientSpace target,
                                 std::vector<int> image) {
  if (source.dim() > target.dim()) {
    throw std::invalid_argument("inclusion source exceeds target dimension");
  }
  check_injection(image, source.coord_count(), target.dim());
  return VarietyMap(Kind::Inclusion, source, target, 0, std::move(image));
}

VarietyMap VarietyMap::permutation(AmbientSpace space, std::vector<int> image) {
  check_injection(image, space.coord_count(), space.dim());
  return VarietyMap(Kind::Permutation, space, space, 0, std::move(image));
}

long VarietyMap::power_degree() const {
  if (kind_ != Kind::Power) {
    throw std::logic_error("power_degree on a non-power map");
  }
  return degree_;
}

const std::vector<int>& VarietyMap::image() const {
  if (kind_ == Kind::Power) {
    throw std::logic_error("image on a power map");
  }
  return image_;
}

std::uint32_t VarietyMap::map_support(std::uint32_t source_support) const {
  if (source_support == 0 || source_support > source_.full_mask()) {
    throw std::invalid_argument("support pattern outside the source lattice");
  }
  if (kind_ == Kind::Power) {
    return source_support;  // d-th powers vanish exactly where x does
  }
  std::uint32_t out = 0;
  for (int i = 0; i < source_.coord_count(); ++i) {
    if (source_support & (std::uint32_t{1} << i)) {
      out |= std::uint32_t{1} << image_[i];
    }
  }
  return out;
}

std::string VarietyMap::descriptor() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Power:
      os << "pow:" << degree_;
      break;
    case Kind::Inclusion:
    case Kind::Permutation:
      os << (kind_ == Kind::Inclusion ? "incl:" : "perm:");
      for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) os << ',';
        os << image_[i];
      }
      break;
  }
  return os.str();
}

VarietyMap VarietyMap::parse_descriptor(const std::string& text,
                                        AmbientSpace ambient) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("map descriptor needs 'kind:args', got '" +
                                text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (kind == "pow") {
    std::size_t used = 0;
    long d = std::stol(args, &used);
    if (used != args.size()) {
      throw std::invalid_argument("bad power degree '" + args + "'");
    }
    return power(ambient, d);
  }
  const std::vector<long> values = parse_long_list(args);
  std::vector<int> image(values.begin(), values.end());
  if (kind == "incl") {
    AmbientSpace source(static_cast<int>(image.size()) - 1);
    return inclusion(source, ambient, std::move(image));
  }
  if (kind == "perm") {
    if (static_cast<int>(image.size()) != ambient.coord_count()) {
      throw std::invalid_argument("permutation must list all of 0..n");
    }
    return permutation(ambient, std::move(image));
  }
  throw std::invalid_argument("unknown map kind '" + kind +
                              "' (expected pow, incl, or perm)");
}

ConstructibleFunction pushforward_cf(const VarietyMap& map,
                                     const ConstructibleFunction& f) {
  if (f.ambient() != map.source()) {
    throw std::invalid_argument("function ambient does not match map source");
  }
  ConstructibleFunction out(map.target());
  const LatticeVector& in = f.orbit_coeffs();
  if (map.kind() == VarietyMap::Kind::Power) {
    const unsigned long d = static_cast<unsigned long>(map.power_degree());
    for (std::uint32_t s = 1; s <= map.source().full_mask(); ++s) {
      if (sgn(in[s]) != 0) {
        out.set_coeff(s, in[s] * Rational(int_pow(d, std::popcount(s) - 1)));
      }
    }
  } else {
    for (std::uint32_t s = 1; s <= map.source().full_mask(); ++s) {
      if (sgn(in[s]) != 0) {
        out.set_coeff(map.map_support(s), in[s]);
      }
    }
  }
  return out;
}

HomologyClass pushforward_homology(const VarietyMap& map,
                                   const HomologyClass& h) {
  if (h.ambient() != map.source()) {
    throw std::invalid_argument("class ambient does not match map source");
  }
  HomologyClass out(map.target());
  switch (map.kind()) {
    case VarietyMap::Kind::Power: {
      const unsigned long d = static_cast<unsigned long>(map.power_degree());
      for (int k = 0; k <= map.source().dim(); ++k) {
        if (sgn(h[k]) != 0) out[k] = h[k] * Rational(int_pow(d, k));
      }
      break;
    }
    case VarietyMap::Kind::Inclusion:
      for (int k = 0; k <= map.source().dim(); ++k) {
        out[k] = h[k];
      }
      break;
    case VarietyMap::Kind::Permutation:
      out = h;
      break;
  }
  return out;
}

std::vector<FiberContribution> fiber_oracle(const VarietyMap& map,
                                            std::uint32_t target_support) {
  if (target_support == 0 || target_support > map.target().full_mask()) {
    throw std::invalid_argument("support pattern outside the target lattice");
  }
  switch (map.kind()) {
    case VarietyMap::Kind::Power: {
      // A preimage of a point with support T has support T, and choosing it
      // amounts to choosing a d-th root per nonzero coordinate. Enumerate the
      // exponent tuples and identify two tuples that differ by a constant
      // shift mod d (multiplying the point by a d-th root of unity).
      const long d = map.power_degree();
      const int k = std::popcount(target_support);
      if (d == 1) {
        return {{target_support, Integer(1)}};
      }
      Integer tuples = int_pow(static_cast<unsigned long>(d),
                               static_cast<unsigned long>(k));
      if (tuples > Integer(1) << 24) {
        throw std::length_error("fiber oracle: too many root tuples (" +
                                tuples.get_str() + ")");
      }
      std::set<std::vector<long>> classes;
      std::vector<long> exps(k, 0);
      while (true) {
        std::vector<long> canon(k);
        for (int i = 0; i < k; ++i) {
          canon[i] = ((exps[i] - exps[0]) % d + d) % d;
        }
        classes.insert(std::move(canon));
        int pos = 0;
        while (pos < k && exps[pos] == d - 1) {
          exps[pos] = 0;
          ++pos;
        }
        if (pos == k) break;
        ++exps[pos];
      }
      return {{target_support, Integer(classes.size())}};
    }
    case VarietyMap::Kind::Inclusion: {
      // The point lies in the image iff its support sits inside the image of
      // the injection; the preimage is then the single point with the pulled
      // back support.
      std::uint32_t preimage = 0;
      std::uint32_t covered = 0;
      for (int i = 0; i < map.source().coord_count(); ++i) {
        const std::uint32_t bit = std::uint32_t{1} << map.image()[i];
        if (target_support & bit) {
          preimage |= std::uint32_t{1} << i;
          covered |= bit;
        }
      }
      if (covered != target_support) {
        return {};  // some nonzero coordinate is not in the image
      }
      return {{preimage, Integer(1)}};
    }
    case VarietyMap::Kind::Permutation: {
      std::uint32_t preimage = 0;
      for (int i = 0; i < map.source().coord_count(); ++i) {
        if (target_support & (std::uint32_t{1} << map.image()[i])) {
          preimage |= std::uint32_t{1} << i;
        }
      }
      return {{preimage, Integer(1)}};
    }
  }
  return {};
}

MapPipeline::MapPipeline(std::vector<VarietyMap> maps)
    : maps_(std::move(maps)) {
  if (maps_.empty()) {
    throw std::invalid_argument("pipeline needs at least one map");
  }
  for (std::size_t i = 1; i < maps_.size(); ++i) {
    if (maps_[i].source() != maps_[i - 1].target()) {
      throw std::invalid_argument(
          "pipeline maps do not chain: target/source mismatch at step " +
          std::to_string(i));
    }
  }
}

AmbientSpace MapPipeline::source() const { return maps_.front().source(); }

AmbientSpace MapPipeline::target() const { return maps_.back().target(); }

ConstructibleFunction MapPipeline::pushforward_cf(
    const ConstructibleFunction& f) const {
  ConstructibleFunction out = f;
  for (const VarietyMap& m : maps_) {
    out = csmlat::pushforward_cf(m, out);
  }
  return out;
}

HomologyClass MapPipeline::pushforward_homology(const HomologyClass& h) const {
  HomologyClass out = h;
  for (const VarietyMap& m : maps_) {
    out = csmlat::pushforward_homology(m, out);
  }
  return out;
}

MapPipeline compose(std::vector<VarietyMap> maps) {
  return MapPipeline(std::move(maps));
}

}  // namespace csmlat
