"""Exploratory: test chi_DP(Line(G)) <= floor(3 Delta/2) on all small multigraphs.

Not a verification of anything; it only reports instances where the bound
is tight or where the budget was too small to decide.
"""
import argparse

from dpcolor.constructions import conjecture_probe
from dpcolor.oracles import small_multigraphs
from dpcolor.solver import BudgetExceeded


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-edges", type=int, default=4)
    ap.add_argument("--budget", type=int, default=10**5)
    args = ap.parse_args()
    tight = skipped = 0
    graphs = small_multigraphs(args.max_edges)
    for g in graphs:
        if g.m == 0:
            continue
        try:
            rep = conjecture_probe(g, budget=args.budget)
        except BudgetExceeded:
            skipped += 1
            continue
        if not rep.holds:
            print("COUNTEREXAMPLE", g, rep)
        elif rep.chi_dp_line == rep.bound:
            tight += 1
            print("tight:", g.edges, rep)
    print(f"{len(graphs)} graphs, {tight} tight, {skipped} over budget")


if __name__ == "__main__":
    main()
