"""Print chi, chi', chi_DP and chi'_DP for a handful of small named graphs.

Entries that would need more than --budget normalized covers print '>budget'.
"""
import argparse

from dpcolor import oracles
from dpcolor.graph import (
    chromatic_index_exact, complete_bipartite, complete_graph, complete_multigraph,
    cycle_graph, line_graph, path_graph, petersen_graph,
)
from dpcolor.solver import BudgetExceeded, chi_dp

GRAPHS = {
    "P4": path_graph(4),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "K4": complete_graph(4),
    "K2,3": complete_bipartite(2, 3),
    "K3,3": complete_bipartite(3, 3),
    "K^2_3": complete_multigraph(3, 2),
    "Petersen": petersen_graph(),
}


def _fmt(fn):
    try:
        return str(fn())
    except BudgetExceeded:
        return ">budget"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=10**6)
    args = ap.parse_args()
    print(f"{'graph':<10}{'chi':>5}{'chi_DP':>8}{'chi_e':>7}{'chi_e_DP':>10}")
    for name, g in GRAPHS.items():
        chi = oracles.chromatic_number(g) if g.n <= 8 else "-"
        cdp = _fmt(lambda: chi_dp(g, budget=args.budget))
        ce = chromatic_index_exact(g, g.max_degree() + 2)
        cedp = _fmt(lambda: chi_dp(line_graph(g), budget=args.budget))
        print(f"{name:<10}{chi!s:>5}{cdp:>8}{ce!s:>7}{cedp:>10}")


if __name__ == "__main__":
    main()
