#include "gainline/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace gainline {

SignedAdjacency signed_adjacency(const GainGraph& g) {
  if (g.group->order() != 2)
    throw std::invalid_argument("signed adjacency needs a t2 gain graph");
  SignedAdjacency A;
  A.n = g.graph.n;
  A.a.assign(static_cast<size_t>(A.n) * A.n, 0.0);
  Elem id = g.group->identity();
  for (int k = 0; k < g.graph.m(); ++k) {
    auto [u, v] = g.graph.edges[k];
    double sign = g.gains[k] == id ? 1.0 : -1.0;
    A.a[static_cast<size_t>(u) * A.n + v] = sign;
    A.a[static_cast<size_t>(v) * A.n + u] = sign;
  }
  return A;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n == 0) return {};
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  // cyclic Jacobi: rotate away off-diagonal entries until negligible
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::fabs(apq) < 1e-15) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

Spectrum spectrum(const SignedAdjacency& a) {
  Spectrum s;
  s.eigenvalues = symmetric_eigenvalues(a.a, a.n);
  s.tolerance = kSpectralTolerance;
  return s;
}

bool is_signed_line_spectral(const GainGraph& L, int s) {
  if (s != 1 && s != -1)
    throw std::invalid_argument("spectral test takes s = +1 or -1");
  if (!is_line_graph_classical(L.graph))
    throw std::invalid_argument(
        "spectral line test requires a line graph as underlying graph");
  Spectrum sp = spectrum(signed_adjacency(L));
  if (s == 1) return sp.min() >= -2.0 - kSpectralTolerance;
  return sp.max() <= 2.0 + kSpectralTolerance;
}

const std::vector<std::pair<std::string, GainGraph>>& signed_forbidden_catalog(
    int s) {
  static const auto build = [](int sign) {
    auto t2 = named_group("t2");
    Elem pos = t2->identity(), neg = 1;
    Elem uniform = sign == 1 ? neg : pos;
    std::vector<std::pair<std::string, GainGraph>> out;
    out.emplace_back(sign == 1 ? "paw_all_negative" : "paw_all_positive",
                     GainGraph::constant(patterns::paw(), t2, uniform));
    out.emplace_back(sign == 1 ? "K4_all_negative" : "K4_all_positive",
                     GainGraph::constant(patterns::k4(), t2, uniform));
    GainGraph sigma1 = GainGraph::constant(patterns::k4(), t2, pos);
    sigma1.set_gain(0, 1, neg);  // exactly one negative edge
    out.emplace_back("K4_sigma1", sigma1);
    out.emplace_back(sign == 1 ? "diamond_all_negative" : "diamond_all_positive",
                     GainGraph::constant(patterns::diamond(), t2, uniform));
    return out;
  };
  static const auto plus = build(1);
  static const auto minus = build(-1);
  if (s == 1) return plus;
  if (s == -1) return minus;
  throw std::invalid_argument("catalog takes s = +1 or -1");
}

std::optional<ForbiddenWitness> forbidden_signed_subgraph(const GainGraph& L,
                                                          int s) {
  if (L.group->order() != 2)
    throw std::invalid_argument("signed subgraph scan needs a t2 gain graph");
  const auto& catalog = signed_forbidden_catalog(s);
  std::optional<ForbiddenWitness> found;
  if (L.graph.n < 4) return found;
  std::vector<int> subset(4);
  // all 4-subsets
  for (int a = 0; a < L.graph.n && !found; ++a)
    for (int b = a + 1; b < L.graph.n && !found; ++b)
      for (int c = b + 1; c < L.graph.n && !found; ++c)
        for (int d = c + 1; d < L.graph.n && !found; ++d) {
          subset = {a, b, c, d};
          auto ind = vertex_induced(L, subset);
          for (const auto& [name, pat] : catalog) {
            if (ind.graph.graph.m() != pat.graph.m()) continue;
            if (auto sw = switching_isomorphism(pat, ind.graph)) {
              ForbiddenWitness w;
              w.vertices = subset;
              w.pattern = name;
              for (int x : sw->iso) w.iso.push_back(subset[x]);
              found = w;
              break;
            }
          }
        }
  return found;
}

RadiusClass classify_by_spectral_radius(const SimpleGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("radius classification needs a connected graph");
  if (g.m() > 0 && !is_line_graph_classical(g))
    throw std::invalid_argument("radius classification expects a line graph");
  auto t2 = named_group("t2");
  Spectrum sp =
      spectrum(signed_adjacency(GainGraph::constant(g, t2, t2->identity())));
  double radius = g.n == 0 ? 0.0
                           : std::max(std::fabs(sp.min()), std::fabs(sp.max()));
  if (radius > 2.0 + kSpectralTolerance) return RadiusClass::other;
  // spectral radius <= 2 on a connected line graph forces a path or cycle
  bool all_deg2 = true, max_deg2 = true;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 2) all_deg2 = false;
    if (g.degree(v) > 2) max_deg2 = false;
  }
  if (all_deg2 && g.m() == g.n) return RadiusClass::cycle;
  if (max_deg2 && g.m() == g.n - 1) return RadiusClass::path;
  throw internal_inconsistency(
      "spectral radius <= 2 on a line graph that is neither path nor cycle");
}

}  // namespace gainline
