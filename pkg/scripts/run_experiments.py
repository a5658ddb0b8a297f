"""Run reproduction artifacts and store one JSON report per artifact.

    python scripts/run_experiments.py                      # every artifact except the long run
    python scripts/run_experiments.py example4 table2      # a chosen subset
    python scripts/run_experiments.py --long --jobs 8 example3

Reports go to ``results/<artifact>.json`` next to a ``summary.json`` with
pass/fail and wall time per artifact.  The exit status is nonzero if any
artifact has a failing claim.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from bentcodes.reproduce import ARTIFACTS, reproduce

log = logging.getLogger("experiments")


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("artifacts", nargs="*", help=f"subset of: {', '.join(ARTIFACTS)}")
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    ap.add_argument("--long", action="store_true", help="include long enumerations (example3)")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    names = args.artifacts or list(ARTIFACTS)
    unknown = [n for n in names if n not in ARTIFACTS]
    if unknown:
        ap.error(f"unknown artifacts: {unknown}")
    args.out_dir.mkdir(parents=True, exist_ok=True)

    summary = {}
    for name in names:
        log.info("running %s", name)
        res = reproduce(name, long=args.long, workers=args.jobs)
        doc = res.to_dict()
        (args.out_dir / f"{name}.json").write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        summary[name] = {
            "ok": res.ok,
            "claims": len(res.claims),
            "failed": sum(not c.ok for c in res.claims),
            "skipped": len(res.skipped),
            "seconds": round(res.seconds, 2),
        }
        log.info("%s: %s in %.1f s", name, "PASS" if res.ok else "FAIL", res.seconds)
    (args.out_dir / "summary.json").write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    return 0 if all(v["ok"] for v in summary.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
