/*
 * Copyright 2026 The oddcycle Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 1'000'000;

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;  // max coordinate exactly 1
  double residual = 0.0;       // max_i |λ x_i - (A x)_i|
  std::size_t iterations = 0;
  bool converged = false;
};

/// y = A x for a symmetric nonnegative operator on n coordinates.
using ApplyFn = std::function<void(const std::vector<double>& x, std::vector<double>& y)>;

/// Power iteration on A + shift*I from the all-ones vector. The shift keeps
/// bipartite spectra from oscillating; the reported λ and residual are for A.
SpectralResult power_iteration(std::size_t n, const ApplyFn& apply, double shift, double tol = kDefaultSpectralTol,
                               std::size_t max_iterations = kDefaultMaxIterations);

/// Spectral radius of the adjacency matrix, component by component. The
/// Perron vector lives on the attaining component (the one with the
/// smallest vertex on ties) and is zero elsewhere.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultSpectralTol,
                               std::size_t max_iterations = kDefaultMaxIterations);

/// Matrix-free power iteration for extremal_suspension(n, q), in O(n) per
/// step; usable far beyond the sizes where the explicit graph fits in memory.
SpectralResult suspension_spectral_radius(std::size_t n, std::size_t q, double tol = kDefaultSpectralTol,
                                          std::size_t max_iterations = kDefaultMaxIterations);

// ---------------------------------------------------------------------------
// Quotients

struct QuotientMatrix {
  std::vector<VertexSet> partition;
  /// entries[i][j]: number of V_j neighbors of the first vertex of V_i.
  std::vector<std::vector<std::int64_t>> entries;
  bool equitable = false;
};

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition);

/// Largest eigenvalue of an equitable quotient: dense solve for k <= 8,
/// power iteration beyond. Throws not_equitable otherwise.
double quotient_spectral_radius(const QuotientMatrix& q);

/// Coarsest equitable partition by color refinement, cells ordered by
/// their smallest vertex. Its quotient keeps the spectral radius.
std::vector<VertexSet> equitable_partition(const Graph& g);

/// The four-part equitable partition of extremal_suspension(n, q): the
/// smaller part minus the shared vertex, the larger part, the clique minus
/// the shared vertex, and the shared vertex.
std::vector<VertexSet> suspension_partition(std::size_t n, std::size_t q);

/// Monic polynomial with exact integer coefficients; coeffs[i] multiplies x^i.
struct QuarticPoly {
  std::array<std::int64_t, 5> coeffs{0, 0, 0, 0, 1};
  std::string provenance;

  long double operator()(long double x) const;
  std::string to_string() const;
  bool operator==(const QuarticPoly& o) const { return coeffs == o.coeffs; }
};

struct SuspensionCharpoly {
  QuarticPoly direct;   // det(xI - M), expanded
  QuarticPoly printed;  // the closed form as usually printed, with r = q + 1
  bool agree() const { return direct == printed; }
};

/// Characteristic polynomial of
///   M = [[0,b,0,0],[a,0,0,1],[0,0,q-2,1],[0,b,q-1,0]],
/// the quotient of a K_q suspended at a vertex of the a+1 side of K_{a+1,b}.
SuspensionCharpoly charpoly_suspension_quotient(std::int64_t a, std::int64_t b, std::int64_t q);

/// Largest real root of a real polynomial (coeffs[i] multiplies x^i) that is
/// below `bracket_hi`. Roots are isolated between the real roots of the
/// derivative, so even-multiplicity roots are found too. Throws
/// bracket_failure unless p(bracket_hi) > 0 and a real root lies below it.
long double largest_real_root(std::span<const long double> coeffs, long double bracket_hi);
long double largest_real_root(const QuarticPoly& p, long double bracket_hi);

/// Quotient parameters (a, b, q) of extremal_suspension(n, q).
std::array<std::int64_t, 3> suspension_quotient_params(std::size_t n, std::size_t q);

/// λ(T_{n-r+1,2} ∘ K_r) from the quartic only.
double lambda_extremal_quotient(std::size_t n, std::size_t r);

struct LambdaCrossCheck {
  double quotient = 0.0;
  SpectralResult power;
  std::string power_method;  // "explicit" or "structured"
  double difference = 0.0;
};

/// Both ways: the quartic, and power iteration on the explicit graph (or the
/// matrix-free operator when the graph has more than `explicit_edge_limit`
/// edges).
LambdaCrossCheck lambda_extremal_check(std::size_t n, std::size_t r, double tol = kDefaultSpectralTol,
                                       std::size_t explicit_edge_limit = 20'000'000);

/// Quotient value after checking agreement within max(tol, 1e-8); throws
/// construction_failure on disagreement.
double lambda_extremal(std::size_t n, std::size_t r, double tol = kDefaultSpectralTol);

/// λ(T_{n-r+2,2} ∘ K_{r-1}), from the quartic.
double lambda_star(std::size_t n, std::size_t r);

// ---------------------------------------------------------------------------
// Inequality checkers

struct SunDasCheck {
  double lhs = 0.0;  // λ²(G - v)
  double rhs = 0.0;  // λ²(G) - 2 d(v)
  bool holds = false;
};

SunDasCheck sun_das_check(const Graph& g, Vertex v, double slack = 1e-8);

/// (ℓ - 1/2 + sqrt(4m + (ℓ - 1/2)²)) / 2 with ℓ = two_ell / 2.
double zls_threshold(std::uint64_t m, std::uint64_t two_ell);

/// G - {vj v : v in S} + {vi v : v in S}. Requires S nonempty,
/// S ⊆ N(vj) \ N(vi) and vi ∉ S.
Graph rotate(const Graph& g, Vertex vi, Vertex vj, const VertexSet& s);

struct RotationCheck {
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double xi = 0.0;
  double xj = 0.0;
  bool perron_order = false;  // x_i >= x_j
  bool increased = false;     // λ strictly grew
};

RotationCheck assert_rotation_increases(const Graph& g, Vertex vi, Vertex vj, const VertexSet& s,
                                        double slack = 1e-10);

struct ClassicalBounds {
  double lambda = 0.0;
  double wilf = 0.0;        // (1 - 1/r) n
  double nikiforov = 0.0;   // sqrt((1 - 1/r) 2m)
  bool wilf_holds = false;
  bool nikiforov_holds = false;
};

ClassicalBounds classical_bounds(const Graph& g, std::size_t r, double slack = 1e-9);

}  // namespace oddcycle
