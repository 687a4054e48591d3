"""Run every registered claim and dump a JSON record (one entry per claim).

    python scripts/reproduce_claims.py --out results/claims.json
"""
import argparse
import json
import platform
from pathlib import Path

from dpcolor.claims import CLAIMS, run_claim


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results/claims.json"))
    args = ap.parse_args()
    rows = []
    for cid in CLAIMS:
        r = run_claim(cid)
        rows.append({"id": r.id, "claim": r.anchor, "passed": r.passed, "detail": r.detail,
                     "seconds": round(r.seconds, 3), "tier": CLAIMS[cid].tier})
        print(f"{r.id:<4} {'PASS' if r.passed else 'FAIL'} {r.seconds:8.2f}s  {r.detail}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"python": platform.python_version(), "claims": rows}, indent=2))


if __name__ == "__main__":
    main()
