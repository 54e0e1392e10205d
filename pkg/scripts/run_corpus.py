import glob
import os
import sys
import time

import pandas as pd

# --- Adjust path to import from root ---
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(PROJECT_ROOT)
# --- End Path Adjust ---

from src.cli.spec_file import load_spec
from src.utils.config_loader import get_settings
from src.utils.errors import MatroidError
from src.verification.report import FAIL
from src.verification.verifier import IdentityVerifier


def verify_file(path):
    """One summary row per spec file: instance facts plus every identity's status."""
    started = time.perf_counter()
    mm = load_spec(path)
    report = IdentityVerifier(mm).run()
    row = {
        "instance": os.path.splitext(os.path.basename(path))[0],
        "n": mm.n,
        "rank": mm.matroid.full_rank,
        "trivial_multiplicity": mm.is_trivial,
        "overall": report.overall,
        # Random multiplicity tables are not arithmetic in general.
        "identities_ok": all(e.status != FAIL for e in report.entries if e.name != "arithmetic_axioms"),
        "seconds": round(time.perf_counter() - started, 3),
    }
    row.update({e.name: e.status for e in report.entries})
    return row


def main():
    print("\n--- Running Verification Corpus ---")
    settings = get_settings()
    paths = sorted(glob.glob(os.path.join(settings.corpus_dir, "*.json")))
    if not paths:
        print(f"❌ No spec files in '{settings.corpus_dir}'. Run scripts/generate_corpus.py first.")
        sys.exit(2)
    rows = []
    for path in paths:
        try:
            rows.append(verify_file(path))
        except MatroidError as e:
            print(f"❌ {path}: {e}")
            rows.append({"instance": os.path.basename(path), "overall": "error", "identities_ok": False})
    summary = pd.DataFrame(rows)
    out_path = os.path.join(settings.corpus_dir, "summary.csv")
    summary.to_csv(out_path, index=False)
    broken = summary[~summary["identities_ok"].astype(bool)]
    print(f"   -> {len(summary)} instances, {len(broken)} with failing identities, "
          f"{summary['seconds'].sum():.1f}s total.")
    print(f"   -> Summary written to '{out_path}'.")
    if len(broken):
        print(broken[["instance", "overall"]].to_string(index=False))
        sys.exit(1)
    print("✅ Every identity holds on the corpus.")


if __name__ == '__main__':
    main()
