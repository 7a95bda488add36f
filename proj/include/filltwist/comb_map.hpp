#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace filltwist {

// A dart is a directed edge-end. Darts of a canonical map are dense in
// [0, 4V) and vertex v owns darts 4v..4v+3 in rotation order.
using Dart = std::int32_t;

// Combinatorial map of a 4-valent graph cellularly embedded in a closed
// oriented surface. sigma rotates darts counterclockwise around their
// vertex; alpha pairs the two ends of each edge.
struct CombMap {
  std::int32_t vertex_count = 0;
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;

  std::int32_t dart_count() const { return static_cast<std::int32_t>(sigma.size()); }
  std::int32_t edge_count() const { return dart_count() / 2; }

  // Valid on canonical maps only (vertex v owns darts 4v..4v+3).
  std::int32_t vertex_of(Dart d) const { return d / 4; }

  // Straight-ahead successor: cross the edge, pass straight through the
  // far vertex. Orbits of this map, merged with alpha, are the curves.
  Dart straight_ahead(Dart d) const { return sigma[sigma[alpha[d]]]; }

  // Face successor under the sigma-after-alpha convention.
  Dart face_next(Dart d) const { return sigma[alpha[d]]; }

  bool operator==(const CombMap&) const = default;
};

struct MapViolation {
  std::string message;
  Dart dart = -1;
};

// Checks the CombMap invariants: dart count 4V, sigma a permutation made
// of V disjoint 4-cycles, alpha a fixed-point-free involution. Returns
// the first violation found, or nullopt.
std::optional<MapViolation> validate_map(const CombMap& m);

struct FaceReport {
  std::vector<std::vector<Dart>> faces;  // each cycle starts at its minimal dart
  int euler = 0;                         // V - E + F summed over components
  int genus = 0;                         // sum of per-component genus
  int components = 0;
  std::vector<int> component_genus;

  std::vector<int> face_degrees() const;  // sorted multiset of face lengths
};

// Traces the orbits of sigma∘alpha. Faces are listed by minimal dart, so
// equal maps produce byte-identical reports.
FaceReport trace_faces(const CombMap& m);

struct ComponentReport {
  int count = 0;
  std::vector<std::int32_t> vertex_component;  // component id per vertex
};

ComponentReport connected_components(const CombMap& m);

// Relabels darts so vertex v owns 4v..4v+3 in sigma order, vertex order
// by minimal old dart, each cycle starting at its minimal old dart.
// Idempotent. If relabel is given it receives the old->new dart mapping.
CombMap canonicalize(const CombMap& m, std::vector<Dart>* relabel = nullptr);

bool is_canonical(const CombMap& m);

// Errors raised by operations whose preconditions are violated.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace filltwist
