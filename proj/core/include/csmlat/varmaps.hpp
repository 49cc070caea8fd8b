#pragma once

// Morphisms of the desk-scale subcategory: coordinatewise power maps,
// coordinate inclusions, coordinate permutations. Each carries pushforward
// actions on constructible functions and on homology; a brute-force fiber
// oracle recomputes the constructible pushforward from its definition.

#include <cstdint>
#include <string>
#include <vector>

#include "csmlat/constructible.hpp"
#include "csmlat/homology.hpp"

namespace csmlat {

class VarietyMap {
 public:
  enum class Kind { Power, Inclusion, Permutation };

  // [x_0 : ... : x_n] -> [x_0^d : ... : x_n^d] on P^n, d >= 1.
  static VarietyMap power(AmbientSpace space, long degree);
  // Linear embedding P^m -> P^n induced by an injection {0..m} -> {0..n};
  // `image[i]` is the target coordinate carrying source coordinate i.
  static VarietyMap inclusion(AmbientSpace source, AmbientSpace target,
                              std::vector<int> image);
  // Coordinate permutation of P^n; `image[i]` is where coordinate i lands.
  static VarietyMap permutation(AmbientSpace space, std::vector<int> image);

  Kind kind() const { return kind_; }
  AmbientSpace source() const { return source_; }
  AmbientSpace target() const { return target_; }
  long power_degree() const;
  const std::vector<int>& image() const;

  // Support pattern of the image of a point with the given support.
  std::uint32_t map_support(std::uint32_t source_support) const;

  // CLI descriptor: "pow:d", "incl:i0,...,im", "perm:p0,...,pn".
  std::string descriptor() const;
  // Inverse of descriptor(); `ambient` fixes the target space.
  static VarietyMap parse_descriptor(const std::string& text,
                                     AmbientSpace ambient);

 private:
  VarietyMap(Kind kind, AmbientSpace source, AmbientSpace target, long degree,
             std::vector<int> image);

  Kind kind_;
  AmbientSpace source_;
  AmbientSpace target_;
  long degree_;             // Power only
  std::vector<int> image_;  // Inclusion/Permutation only
};

// f_* on constructible functions, defined on the orbit basis and extended
// linearly: a degree-d power map scales 1_{O_S} by d^{|S|-1} (the map
// restricted to O_S is a self-covering of that degree); inclusions and
// permutations relabel the orbit.
ConstructibleFunction pushforward_cf(const VarietyMap& map,
                                     const ConstructibleFunction& f);

// f_* on homology: a degree-d power map multiplies the degree-k coefficient
// by d^k; an inclusion embeds coefficients degreewise; a permutation acts as
// the identity (it lies in the connected projective linear group).
HomologyClass pushforward_homology(const VarietyMap& map,
                                   const HomologyClass& h);

struct FiberContribution {
  std::uint32_t source_support;
  Integer chi;  // Euler characteristic of (fiber over the point) meet O_S

  friend bool operator==(const FiberContribution& a,
                         const FiberContribution& b) {
    return a.source_support == b.source_support && a.chi == b.chi;
  }
};

// Brute force of the pushforward definition: for a point y with the given
// support, the Euler characteristic of f^{-1}(y) meet O_S for every source
// stratum S meeting the fiber. Fibers in scope are finite, so chi = point
// count; the power-map count enumerates d-th-root choice tuples on the
// support coordinates modulo the d diagonal root-of-unity rescalings.
std::vector<FiberContribution> fiber_oracle(const VarietyMap& map,
                                            std::uint32_t target_support);

// A composable chain of maps, applied first-to-last. Its pushforwards are by
// contract the compositions of the constituents' pushforwards.
class MapPipeline {
 public:
  explicit MapPipeline(std::vector<VarietyMap> maps);

  AmbientSpace source() const;
  AmbientSpace target() const;
  const std::vector<VarietyMap>& maps() const { return maps_; }

  ConstructibleFunction pushforward_cf(const ConstructibleFunction& f) const;
  HomologyClass pushforward_homology(const HomologyClass& h) const;

 private:
  std::vector<VarietyMap> maps_;
};

MapPipeline compose(std::vector<VarietyMap> maps);

}  // namespace csmlat
