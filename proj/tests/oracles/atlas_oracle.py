#
# Copyright 2026 The oddcycle Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Independent reference values computed with networkx and numpy.

Run from the repository root:  python3 tests/oracles/atlas_oracle.py
Writes tests/fixtures/independent.json, which the C++ tests compare against.
Nothing here shares code with the library.
"""

import itertools
import json
import math
from pathlib import Path

import networkx as nx
import numpy as np
from networkx.generators.atlas import graph_atlas_g


def spectral_radius(g):
    if g.number_of_edges() == 0:
        return 0.0
    return float(max(np.linalg.eigvalsh(nx.to_numpy_array(g))))


def has_cycle_of_length(g, length):
    return any(len(c) == length for c in nx.simple_cycles(g, length_bound=length))


def chromatic_number(g):
    nodes = list(g.nodes())
    if not nodes:
        return 0
    for k in range(1, len(nodes) + 1):
        for colors in itertools.product(range(k), repeat=len(nodes)):
            if colors[0] != 0:
                continue
            c = dict(zip(nodes, colors))
            if all(c[u] != c[v] for u, v in g.edges()):
                return k
    return len(nodes)


def extremal(graphs, objective):
    best, winners = None, []
    for g in graphs:
        value = g.number_of_edges() if objective == "edges" else spectral_radius(g)
        if best is None or value > best + 1e-9:
            best, winners = value, [g]
        elif abs(value - best) <= 1e-9:
            winners.append(g)
    return best, winners


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def extremal_suspension(n, r):
    # Bipartite Turán graph on n - r + 1 vertices with K_r sharing one vertex
    # of the smaller part.
    core = n - r + 1
    small, large = core // 2, core - core // 2
    g = nx.complete_bipartite_graph(small, large)
    clique = [0] + list(range(core, n))
    g.add_nodes_from(clique)
    g.add_edges_from(itertools.combinations(clique, 2))
    return g


def main():
    atlas = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1]
    by_order = {}
    for g in atlas:
        by_order.setdefault(g.number_of_nodes(), []).append(g)

    out = {"counts": {}, "triangle_free_counts": {}, "records": [], "lambda_extremal": []}
    chi = {}
    for n in range(1, 8):
        graphs = by_order[n]
        out["counts"][str(n)] = len(graphs)
        out["triangle_free_counts"][str(n)] = sum(not has_cycle_of_length(g, 3) for g in graphs)

    for n in range(2, 8):
        for length in (3, 5, 7):
            free = [g for g in by_order[n] if not has_cycle_of_length(g, length)]
            for r in (0, 3, 4):
                pool = free
                if r > 0:
                    pool = []
                    for g in free:
                        key = id(g)
                        if key not in chi:
                            chi[key] = chromatic_number(g)
                        if chi[key] >= r:
                            pool.append(g)
                if not pool:
                    continue
                for objective in ("edges", "lambda"):
                    if objective == "lambda" and r == 0:
                        continue
                    best, winners = extremal(pool, objective)
                    out["records"].append({
                        "n": n, "cycle_length": length, "min_chromatic": r, "objective": objective,
                        "optimum": best, "qualifying": len(pool), "extremal": [g6(g) for g in winners],
                    })

    for n in (8, 12, 20, 40):
        for r in range(3, min(10, n - 2) + 1):
            out["lambda_extremal"].append({"n": n, "r": r, "lambda": spectral_radius(extremal_suspension(n, r))})

    target = Path(__file__).resolve().parents[1] / "fixtures" / "independent.json"
    target.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {target} ({len(out['records'])} records)")


if __name__ == "__main__":
    main()
