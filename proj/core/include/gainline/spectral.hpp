#pragma once

#include "gainline/recognition.hpp"

namespace gainline {

/// Real symmetric {-1,0,+1} adjacency matrix of a signed graph.
struct SignedAdjacency {
  int n = 0;
  std::vector<double> a;  // row-major n x n

  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted ascending
  double tolerance = 1e-7;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Requires a gain graph over an order-2 group (t2): identity -> +1,
/// involution -> -1.
SignedAdjacency signed_adjacency(const GainGraph& g);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
Spectrum spectrum(const SignedAdjacency& a);
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Eigenvalue threshold used by the +-2 tests.
inline constexpr double kSpectralTolerance = 1e-7;

/// For s=+1: lambda_min >= -2 - tol; for s=-1: lambda_max <= 2 + tol.
/// The underlying graph must be a line graph (the theorem's hypothesis).
bool is_signed_line_spectral(const GainGraph& L, int s);

/// Scans 4-vertex subsets for switching-isomorphic copies of the four
/// forbidden signed graphs: for s=+1 these are (P,-1), (K4,-1), (K4,sigma1),
/// (D,-1); for s=-1 the globally negated list.
std::optional<ForbiddenWitness> forbidden_signed_subgraph(const GainGraph& L,
                                                          int s);

/// The four forbidden signed patterns for the given s as gain graphs over t2.
const std::vector<std::pair<std::string, GainGraph>>& signed_forbidden_catalog(
    int s);

enum class RadiusClass { cycle, path, other };

/// Spectral radius <= 2 forces a cycle or path among connected line graphs.
RadiusClass classify_by_spectral_radius(const SimpleGraph& g);

}  // namespace gainline
