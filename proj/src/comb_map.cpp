#include "filltwist/comb_map.hpp"

#include <algorithm>
#include <numeric>

namespace filltwist {

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart x : p) {
    if (x < 0 || x >= static_cast<Dart>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

std::optional<MapViolation> validate_map(const CombMap& m) {
  const std::int32_t n = m.dart_count();
  if (m.vertex_count < 0) return MapViolation{"negative vertex count", -1};
  if (n != 4 * m.vertex_count)
    return MapViolation{"dart count is not 4 * vertex count", -1};
  if (static_cast<std::int32_t>(m.alpha.size()) != n)
    return MapViolation{"sigma and alpha sizes differ", -1};
  if (!is_permutation_of_range(m.sigma))
    return MapViolation{"sigma is not a permutation of the darts", -1};
  if (!is_permutation_of_range(m.alpha))
    return MapViolation{"alpha is not a permutation of the darts", -1};
  for (Dart d = 0; d < n; ++d) {
    if (m.alpha[d] == d) return MapViolation{"alpha not fixed-point-free", d};
    if (m.alpha[m.alpha[d]] != d) return MapViolation{"alpha not an involution", d};
  }
  std::vector<char> seen(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    int len = 0;
    Dart x = d;
    do {
      seen[x] = 1;
      x = m.sigma[x];
      ++len;
    } while (x != d && len <= 4);
    if (len != 4 || x != d) return MapViolation{"vertex not 4-valent", d};
  }
  return std::nullopt;
}

std::vector<int> FaceReport::face_degrees() const {
  std::vector<int> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
  std::sort(out.begin(), out.end());
  return out;
}

FaceReport trace_faces(const CombMap& m) {
  const std::int32_t n = m.dart_count();
  FaceReport rep;
  std::vector<std::int32_t> face_of(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (face_of[d] != -1) continue;
    std::vector<Dart> cycle;
    Dart x = d;
    do {
      face_of[x] = static_cast<std::int32_t>(rep.faces.size());
      cycle.push_back(x);
      x = m.face_next(x);
    } while (x != d);
    rep.faces.push_back(std::move(cycle));
  }

  ComponentReport comps = connected_components(m);
  rep.components = comps.count;

  // Per-component V, E, F.
  std::vector<int> cv(comps.count, 0), ce(comps.count, 0), cf(comps.count, 0);
  for (std::int32_t v = 0; v < m.vertex_count; ++v) cv[comps.vertex_component[v]]++;
  for (Dart d = 0; d < n; ++d)
    if (d < m.alpha[d]) ce[comps.vertex_component[m.vertex_of(d)]]++;
  for (const auto& f : rep.faces) cf[comps.vertex_component[m.vertex_of(f[0])]]++;

  rep.euler = 0;
  rep.genus = 0;
  for (int c = 0; c < comps.count; ++c) {
    int eu = cv[c] - ce[c] + cf[c];
    rep.euler += eu;
    rep.component_genus.push_back((2 - eu) / 2);
    rep.genus += (2 - eu) / 2;
  }
  return rep;
}

ComponentReport connected_components(const CombMap& m) {
  ComponentReport rep;
  rep.vertex_component.assign(m.vertex_count, -1);
  for (std::int32_t v0 = 0; v0 < m.vertex_count; ++v0) {
    if (rep.vertex_component[v0] != -1) continue;
    std::vector<std::int32_t> stack{v0};
    rep.vertex_component[v0] = rep.count;
    while (!stack.empty()) {
      std::int32_t v = stack.back();
      stack.pop_back();
      for (int i = 0; i < 4; ++i) {
        std::int32_t w = m.vertex_of(m.alpha[4 * v + i]);
        if (rep.vertex_component[w] == -1) {
          rep.vertex_component[w] = rep.count;
          stack.push_back(w);
        }
      }
    }
    rep.count++;
  }
  return rep;
}

CombMap canonicalize(const CombMap& m, std::vector<Dart>* relabel) {
  const std::int32_t n = m.dart_count();

  // Vertices of a raw map are the sigma orbits, ordered by minimal dart.
  std::vector<Dart> orbit_min(n, -1);
  std::vector<Dart> mins;
  for (Dart d = 0; d < n; ++d) {
    if (orbit_min[d] != -1) continue;
    Dart mn = d;
    Dart x = d;
    do {
      x = m.sigma[x];
      mn = std::min(mn, x);
    } while (x != d);
    x = d;
    do {
      orbit_min[x] = mn;
      x = m.sigma[x];
    } while (x != d);
    if (mn == d) mins.push_back(d);
  }

  std::vector<Dart> new_id(n, -1);
  std::int32_t v = 0;
  for (Dart start : mins) {
    Dart x = start;
    for (int i = 0; i < 4; ++i) {
      new_id[x] = 4 * v + i;
      x = m.sigma[x];
    }
    ++v;
  }

  CombMap out;
  out.vertex_count = v;
  out.sigma.assign(n, -1);
  out.alpha.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    out.sigma[new_id[d]] = new_id[m.sigma[d]];
    out.alpha[new_id[d]] = new_id[m.alpha[d]];
  }
  if (relabel) *relabel = std::move(new_id);
  return out;
}

bool is_canonical(const CombMap& m) {
  for (Dart d = 0; d < m.dart_count(); ++d) {
    Dart expect = (d % 4 == 3) ? d - 3 : d + 1;
    if (m.sigma[d] != expect) return false;
  }
  return true;
}

}  // namespace filltwist
