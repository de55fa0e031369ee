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

#include "oddcycle/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "oddcycle/constructions.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/structure.hpp"

namespace oddcycle {
namespace {

using Poly = std::vector<long double>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

long double eval(const Poly& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double magnitude(const Poly& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * std::fabs(x) + std::fabs(*it);
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long double>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

long double bisect(const Poly& p, long double lo, long double hi) {
  const bool rising = eval(p, lo) < 0;
  for (int i = 0; i < 400; ++i) {
    long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if ((eval(p, mid) < 0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

bool vanishes(const Poly& p, long double x) {
  return std::fabs(eval(p, x)) <= 1e-15L * std::max<long double>(1, magnitude(p, x));
}

// Real roots in (lo, hi), ascending. Between consecutive critical points the
// polynomial is monotone, so each stretch holds at most one root: either a
// sign change or a critical point where p vanishes (a repeated root).
std::vector<long double> real_roots(Poly p, long double lo, long double hi) {
  trim(p);
  std::vector<long double> roots;
  if (p.size() <= 1) return roots;
  if (p.size() == 2) {
    long double x = -p[0] / p[1];
    if (x > lo && x < hi) roots.push_back(x);
    return roots;
  }
  std::vector<long double> pts{lo};
  for (long double c : real_roots(derivative(p), lo, hi)) pts.push_back(c);
  pts.push_back(hi);
  std::vector<char> zero(pts.size(), 0);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (vanishes(p, pts[i])) {
      zero[i] = 1;
      roots.push_back(pts[i]);
    }
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (zero[i] || zero[i + 1]) continue;
    long double f0 = eval(p, pts[i]);
    long double f1 = eval(p, pts[i + 1]);
    if ((f0 < 0 && f1 > 0) || (f0 > 0 && f1 < 0)) roots.push_back(bisect(p, pts[i], pts[i + 1]));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Layout of extremal_suspension(n, q): part 0 is [0, hi), part 1 is
// [hi, big), the clique's other vertices are [big, n).
struct SuspensionLayout {
  std::size_t n, q, big, hi, lo;
  Vertex cut;

  SuspensionLayout(std::size_t n_, std::size_t q_) : n(n_), q(q_) {
    require(q >= 2 && n >= q + 2, ErrorCode::invalid_parameter, "suspension needs q >= 2 and n >= q + 2");
    big = n - q + 1;
    hi = (big + 1) / 2;
    lo = big / 2;
    cut = extremal_suspension_cut_vertex(n, q);
  }
};

}  // namespace

SpectralResult power_iteration(std::size_t n, const ApplyFn& apply, double shift, double tol,
                               std::size_t max_iterations) {
  require(tol > 0, ErrorCode::invalid_parameter, "tolerance must be positive");
  SpectralResult res;
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n, 0.0);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    apply(x, y);
    long double xx = 0;
    long double xy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      xx += static_cast<long double>(x[i]) * x[i];
      xy += static_cast<long double>(x[i]) * y[i];
    }
    const double lambda = n == 0 ? 0.0 : static_cast<double>(xy / xx);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::fabs(lambda * x[i] - y[i]));
    res.lambda = lambda;
    res.residual = residual;
    res.iterations = it;
    if (residual <= tol) {
      res.converged = true;
      break;
    }
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = y[i] + shift * x[i];
      top = std::max(top, x[i]);
    }
    if (top <= 0) break;
    for (double& v : x) v /= top;
  }
  res.perron = std::move(x);
  return res;
}

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iterations) {
  require(tol > 0, ErrorCode::invalid_parameter, "tolerance must be positive");
  const std::size_t n = g.order();
  SpectralResult best;
  best.converged = true;
  best.perron.assign(n, 0.0);
  if (n == 0) return best;

  bool have = false;
  for (const VertexSet& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    const Graph& h = sub.graph;
    const double shift = std::max(1.0, h.order() == 0 ? 0.0 : static_cast<double>(h.size()) / h.order());
    ApplyFn apply = [&h](const std::vector<double>& x, std::vector<double>& y) {
      for (std::size_t v = 0; v < h.order(); ++v) {
        long double acc = 0;
        for (Vertex w : h.neighbors(static_cast<Vertex>(v))) acc += x[w];
        y[v] = static_cast<double>(acc);
      }
    };
    SpectralResult r = power_iteration(h.order(), apply, shift, tol, max_iterations);
    best.iterations += r.iterations;
    best.converged = best.converged && r.converged;
    if (!have || r.lambda > best.lambda + 1e-12) {
      have = true;
      std::fill(best.perron.begin(), best.perron.end(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) best.perron[comp[i]] = r.perron[i];
      best.lambda = r.lambda;
      best.residual = r.residual;
    }
  }
  return best;
}

SpectralResult suspension_spectral_radius(std::size_t n, std::size_t q, double tol, std::size_t max_iterations) {
  const SuspensionLayout L(n, q);
  ApplyFn apply = [L](const std::vector<double>& x, std::vector<double>& y) {
    long double s0 = 0, s1 = 0, sc = 0;
    for (std::size_t i = 0; i < L.hi; ++i) s0 += x[i];
    for (std::size_t i = L.hi; i < L.big; ++i) s1 += x[i];
    for (std::size_t i = L.big; i < L.n; ++i) sc += x[i];
    for (std::size_t i = 0; i < L.hi; ++i) y[i] = static_cast<double>(s1);
    for (std::size_t i = L.hi; i < L.big; ++i) y[i] = static_cast<double>(s0);
    y[L.cut] = static_cast<double>((L.cut < static_cast<Vertex>(L.hi) ? s1 : s0) + sc);
    for (std::size_t i = L.big; i < L.n; ++i) y[i] = static_cast<double>(sc - x[i] + x[L.cut]);
  };
  const double shift = std::max(1.0, static_cast<double>(L.hi) / 2.0);
  return power_iteration(n, apply, shift, tol, max_iterations);
}

// ---------------------------------------------------------------------------
// Quotients

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
  const std::size_t n = g.order();
  std::vector<int> part(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    require(!partition[i].empty(), ErrorCode::invalid_parameter, "quotient_matrix: empty part");
    for (Vertex v : partition[i]) {
      require(v >= 0 && static_cast<std::size_t>(v) < n && part[v] < 0, ErrorCode::invalid_parameter,
              "quotient_matrix: parts must be disjoint and in range");
      part[v] = static_cast<int>(i);
    }
  }
  require(std::find(part.begin(), part.end(), -1) == part.end(), ErrorCode::invalid_parameter,
          "quotient_matrix: partition does not cover the graph");

  const std::size_t k = partition.size();
  QuotientMatrix q;
  q.partition = partition;
  q.entries.assign(k, std::vector<std::int64_t>(k, 0));
  q.equitable = true;
  std::vector<std::int64_t> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t idx = 0; idx < partition[i].size(); ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(partition[i][idx])) ++counts[part[w]];
      if (idx == 0) {
        q.entries[i] = counts;
      } else if (counts != q.entries[i]) {
        q.equitable = false;
      }
    }
  }
  return q;
}

std::vector<VertexSet> equitable_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n, 0);
  std::size_t cells = n == 0 ? 0 : 1;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    std::vector<std::size_t> sig;
    for (std::size_t v = 0; v < n; ++v) {
      sig.assign(1, color[v]);
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
      next[v] = ids.emplace(sig, ids.size()).first->second;
    }
    const bool stable = ids.size() == cells;
    color.swap(next);
    cells = ids.size();
    if (stable) break;
  }
  // Renumber by first appearance so cells come out ordered by smallest vertex.
  std::vector<std::size_t> rank(cells, SIZE_MAX);
  std::vector<VertexSet> parts;
  for (std::size_t v = 0; v < n; ++v) {
    if (rank[color[v]] == SIZE_MAX) {
      rank[color[v]] = parts.size();
      parts.emplace_back();
    }
    parts[rank[color[v]]].push_back(static_cast<Vertex>(v));
  }
  return parts;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
  require(q.equitable, ErrorCode::not_equitable, "quotient_spectral_radius: partition is not equitable");
  const std::size_t k = q.entries.size();
  if (k == 0) return 0.0;
  if (k <= 8) {
    Eigen::MatrixXd m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<double>(q.entries[i][j]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    double best = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      best = std::max(best, solver.eigenvalues()[i].real());
    return best;
  }
  ApplyFn apply = [&q, k](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < k; ++i) {
      long double acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += static_cast<long double>(q.entries[i][j]) * x[j];
      y[i] = static_cast<double>(acc);
    }
  };
  auto r = power_iteration(k, apply, 1.0, 1e-12);
  require(r.converged, ErrorCode::construction_failure, "quotient power iteration did not converge");
  return r.lambda;
}

std::vector<VertexSet> suspension_partition(std::size_t n, std::size_t q) {
  const SuspensionLayout L(n, q);
  VertexSet part0, part1, clique;
  for (std::size_t i = 0; i < L.hi; ++i) part0.push_back(static_cast<Vertex>(i));
  for (std::size_t i = L.hi; i < L.big; ++i) part1.push_back(static_cast<Vertex>(i));
  for (std::size_t i = L.big; i < L.n; ++i) clique.push_back(static_cast<Vertex>(i));
  VertexSet& with_cut = L.cut < static_cast<Vertex>(L.hi) ? part0 : part1;
  VertexSet& other = L.cut < static_cast<Vertex>(L.hi) ? part1 : part0;
  VertexSet rest;
  for (Vertex v : with_cut)
    if (v != L.cut) rest.push_back(v);
  std::vector<VertexSet> parts{rest, other, clique, {L.cut}};
  // A single-vertex shared side leaves the first part empty.
  if (parts[0].empty()) parts.erase(parts.begin());
  return parts;
}

std::array<std::int64_t, 3> suspension_quotient_params(std::size_t n, std::size_t q) {
  const SuspensionLayout L(n, q);
  return {static_cast<std::int64_t>(L.lo) - 1, static_cast<std::int64_t>(L.hi), static_cast<std::int64_t>(q)};
}

long double QuarticPoly::operator()(long double x) const {
  long double acc = 0;
  for (int i = 4; i >= 0; --i) acc = acc * x + static_cast<long double>(coeffs[i]);
  return acc;
}

std::string QuarticPoly::to_string() const {
  std::string out;
  for (int i = 4; i >= 0; --i) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

SuspensionCharpoly charpoly_suspension_quotient(std::int64_t a, std::int64_t b, std::int64_t q) {
  require(a >= 0 && b >= 1 && q >= 2, ErrorCode::invalid_parameter, "charpoly needs a >= 0, b >= 1, q >= 2");
  const std::int64_t ab1 = (a + 1) * b;
  SuspensionCharpoly out;
  out.direct.coeffs = {a * b * (q - 1), ab1 * (q - 2), -(ab1 + q - 1), -(q - 2), 1};
  out.direct.provenance = "direct expansion of det(xI - M)";
  // The printed closed form, written with r - 3 = q - 2 and r - 2 = q - 1,
  // has (a+1)b + r - 3 in the x^2 slot.
  out.printed.coeffs = {a * b * (q - 1), ab1 * (q - 2), -(ab1 + q - 2), -(q - 2), 1};
  out.printed.provenance = "printed closed form with r = q + 1";
  return out;
}

long double largest_real_root(std::span<const long double> coeffs, long double bracket_hi) {
  Poly p(coeffs.begin(), coeffs.end());
  trim(p);
  require(p.size() >= 2 && p.back() != 0, ErrorCode::bracket_failure, "largest_real_root: constant polynomial");
  require(eval(p, bracket_hi) > 0, ErrorCode::bracket_failure, "largest_real_root: p(bracket_hi) is not positive");
  long double cauchy = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) cauchy = std::max(cauchy, std::fabs(p[i] / p.back()));
  const long double lo = -(1 + cauchy) - 1;
  auto roots = real_roots(p, lo, bracket_hi);
  require(!roots.empty(), ErrorCode::bracket_failure, "largest_real_root: no real root below bracket_hi");
  return roots.back() + 0.0L;  // no negative zero
}

long double largest_real_root(const QuarticPoly& p, long double bracket_hi) {
  std::array<long double, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = static_cast<long double>(p.coeffs[i]);
  return largest_real_root(std::span<const long double>(c), bracket_hi);
}

double lambda_extremal_quotient(std::size_t n, std::size_t r) {
  auto [a, b, q] = suspension_quotient_params(n, r);
  auto poly = charpoly_suspension_quotient(a, b, q).direct;
  return static_cast<double>(largest_real_root(poly, static_cast<long double>(n)));
}

LambdaCrossCheck lambda_extremal_check(std::size_t n, std::size_t r, double tol, std::size_t explicit_edge_limit) {
  LambdaCrossCheck out;
  out.quotient = lambda_extremal_quotient(n, r);
  if (extremal_suspension_edge_count(n, r) <= explicit_edge_limit) {
    out.power = spectral_radius(extremal_suspension(n, r), tol);
    out.power_method = "explicit";
  } else {
    out.power = suspension_spectral_radius(n, r, tol);
    out.power_method = "structured";
  }
  out.difference = std::fabs(out.quotient - out.power.lambda);
  return out;
}

double lambda_extremal(std::size_t n, std::size_t r, double tol) {
  auto check = lambda_extremal_check(n, r, tol);
  require(check.power.converged && check.difference <= std::max(tol, 1e-8), ErrorCode::construction_failure,
          "lambda_extremal: quotient and power iteration disagree by " + std::to_string(check.difference));
  return check.quotient;
}

double lambda_star(std::size_t n, std::size_t r) {
  require(r >= 3 && n >= r + 2, ErrorCode::invalid_parameter, "lambda_star needs r >= 3 and n >= r + 2");
  return lambda_extremal_quotient(n, r - 1);
}

// ---------------------------------------------------------------------------
// Inequality checkers

SunDasCheck sun_das_check(const Graph& g, Vertex v, double slack) {
  require(v >= 0 && static_cast<std::size_t>(v) < g.order(), ErrorCode::invalid_parameter, "vertex out of range");
  const double full = spectral_radius(g).lambda;
  const Vertex gone[] = {v};
  const double without = spectral_radius(delete_vertices(g, gone).graph).lambda;
  SunDasCheck out;
  out.lhs = without * without;
  out.rhs = full * full - 2.0 * static_cast<double>(g.degree(v));
  out.holds = out.lhs >= out.rhs - slack;
  return out;
}

double zls_threshold(std::uint64_t m, std::uint64_t two_ell) {
  require(two_ell >= 1, ErrorCode::invalid_parameter, "zls_threshold needs 2l >= 1");
  const long double shift = (static_cast<long double>(two_ell) - 1) / 2;  // l - 1/2
  return static_cast<double>((shift + std::sqrt(4 * static_cast<long double>(m) + shift * shift)) / 2);
}

Graph rotate(const Graph& g, Vertex vi, Vertex vj, const VertexSet& s) {
  const auto n = static_cast<Vertex>(g.order());
  require(vi >= 0 && vi < n && vj >= 0 && vj < n && vi != vj, ErrorCode::invalid_parameter,
          "rotate: vertices out of range");
  require(!s.empty(), ErrorCode::precondition_violation, "rotate: S is empty");
  for (Vertex v : s) {
    require(v != vi, ErrorCode::precondition_violation, "rotate: v_i lies in S");
    require(g.adjacent(vj, v), ErrorCode::precondition_violation, "rotate: S is not inside N(v_j)");
    require(!g.adjacent(vi, v), ErrorCode::precondition_violation, "rotate: S meets N(v_i)");
  }
  auto in_s = membership(g.order(), s);
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    if ((e.u == vj && in_s[e.v]) || (e.v == vj && in_s[e.u])) continue;
    b.add_edge(e.u, e.v);
  }
  for (Vertex v : s) b.add_edge(vi, v);
  return b.build();
}

RotationCheck assert_rotation_increases(const Graph& g, Vertex vi, Vertex vj, const VertexSet& s, double slack) {
  Graph rotated = rotate(g, vi, vj, s);
  RotationCheck out;
  auto before = spectral_radius(g);
  out.lambda_before = before.lambda;
  out.lambda_after = spectral_radius(rotated).lambda;
  out.xi = before.perron[vi];
  out.xj = before.perron[vj];
  out.perron_order = out.xi >= out.xj - slack;
  out.increased = out.lambda_after > out.lambda_before + slack;
  return out;
}

ClassicalBounds classical_bounds(const Graph& g, std::size_t r, double slack) {
  require(r >= 2, ErrorCode::invalid_parameter, "classical_bounds needs r >= 2");
  ClassicalBounds out;
  out.lambda = spectral_radius(g).lambda;
  const double frac = 1.0 - 1.0 / static_cast<double>(r);
  out.wilf = frac * static_cast<double>(g.order());
  out.nikiforov = std::sqrt(frac * 2.0 * static_cast<double>(g.size()));
  out.wilf_holds = out.lambda <= out.wilf + slack;
  out.nikiforov_holds = out.lambda <= out.nikiforov + slack;
  return out;
}

}  // namespace oddcycle
