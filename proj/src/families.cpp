#include "degpow/families.hpp"

#include <stdexcept>

namespace degpow {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph star(int n) {
  require(n >= 2, "star: n must be >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph friendship(int n) {
  require(n >= 2, "friendship: n must be >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (int v = 1; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete_bipartite(int t, int n) {
  require(1 <= t && t < n, "complete_bipartite: need 1 <= t < n");
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u)
    for (int v = t; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph wheel(int n) {
  require(n >= 4, "wheel: n must be >= 4");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  return Graph(n, edges);
}

Graph split_graph(int n, int k) {
  require(k >= 1 && n >= k + 1, "split: need k >= 1 and n >= k + 1");
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<ProjectivePoint> projective_points(const FiniteField& field) {
  const int q = field.order();
  std::vector<ProjectivePoint> points;
  points.push_back({{0, 0, 1}});
  for (int b = 0; b < q; ++b) points.push_back({{0, 1, b}});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({{1, a, b}});
  return points;
}

Graph polarity_graph(int q) {
  require(prime_power_decomposition(q).first != 0, "polarity: q must be a prime power");
  require(q * q + q + 1 <= Graph::kMaxVertices, "polarity: q^2+q+1 must be at most 64");
  const FiniteField field(q);
  const auto points = projective_points(field);
  auto dot = [&](const ProjectivePoint& x, const ProjectivePoint& y) {
    int sum = 0;
    for (int i = 0; i < 3; ++i) sum = field.add(sum, field.mul(x.coords[i], y.coords[i]));
    return sum;
  };
  std::vector<Edge> edges;
  const int n = static_cast<int>(points.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dot(points[u], points[v]) == 0) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::string to_string(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::star: return "star";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::friendship: return "friendship";
    case FamilyKind::complete_bipartite: return "bipartite(t=" + std::to_string(f.param) + ")";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::split: return "split(k=" + std::to_string(f.param) + ")";
    case FamilyKind::polarity: return "polarity";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "star") return FamilyKind::star;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "friendship") return FamilyKind::friendship;
  if (name == "bipartite" || name == "complete_bipartite") return FamilyKind::complete_bipartite;
  if (name == "wheel") return FamilyKind::wheel;
  if (name == "split") return FamilyKind::split;
  if (name == "polarity") return FamilyKind::polarity;
  return std::nullopt;
}

Graph construct(const FamilyId& f, int n_or_q) {
  switch (f.kind) {
    case FamilyKind::star: return star(n_or_q);
    case FamilyKind::cycle: return cycle_graph(n_or_q);
    case FamilyKind::friendship: return friendship(n_or_q);
    case FamilyKind::complete_bipartite: return complete_bipartite(f.param, n_or_q);
    case FamilyKind::wheel: return wheel(n_or_q);
    case FamilyKind::split: return split_graph(n_or_q, f.param);
    case FamilyKind::polarity: return polarity_graph(n_or_q);
  }
  throw std::invalid_argument("construct: unknown family");
}

ExactInt ep_closed_form(const FamilyId& f, int n, int p) {
  require(p >= 1, "ep_closed_form: p must be >= 1");
  switch (f.kind) {
    case FamilyKind::star:
      require(n >= 2, "star: n must be >= 2");
      return ipow(n - 1, p) + (n - 1);
    case FamilyKind::cycle:
      require(n >= 3, "cycle: n must be >= 3");
      return n * ipow(2, p);
    case FamilyKind::friendship:
      require(n >= 2, "friendship: n must be >= 2");
      if (n % 2) return ipow(n - 1, p) + (n - 1) * ipow(2, p);
      return ipow(n - 1, p) + (n - 2) * ipow(2, p) + 1;
    case FamilyKind::complete_bipartite: {
      const int t = f.param;
      require(1 <= t && t < n, "complete_bipartite: need 1 <= t < n");
      return t * ipow(n - t, p) + (n - t) * ipow(t, p);
    }
    case FamilyKind::wheel:
      require(n >= 4, "wheel: n must be >= 4");
      return ipow(n - 1, p) + (n - 1) * ipow(3, p);
    case FamilyKind::split: {
      const int k = f.param;
      require(k >= 1 && n >= k + 1, "split: need k >= 1 and n >= k + 1");
      return k * ipow(n - 1, p) + (n - k) * ipow(k, p);
    }
    case FamilyKind::polarity: {
      const int q = n;
      require(prime_power_decomposition(q).first != 0, "polarity: q must be a prime power");
      // q+1 absolute points of degree q, q^2 others of degree q+1
      return (q + 1) * ipow(q, p) + ExactInt(q) * q * ipow(q + 1, p);
    }
  }
  throw std::invalid_argument("ep_closed_form: unknown family");
}

}  // namespace degpow
