"""
End-to-end transfer experiment
==============================

Collects babbling data on both plant domains, trains the constrained-domain
forward model, then the CCGAN-GP translator and the WCGAN-GP baseline for
each seed, and finally evaluates all five benchmark shapes.  Every stage goes
through the ``viscoshift`` CLI, so each output directory carries a
``run.json`` manifest that ``viscoshift replay`` can re-execute.

Stages whose outputs already exist are skipped, which makes the script safe
to re-launch after an interruption.

    python demos/run_experiment.py --profile smoke       # 50 epochs, 1 seed
    python demos/run_experiment.py --profile full        # 550 epochs, 3 seeds

The summary lands in ``<out>/results.json``; the acceptance suite reads it.
"""

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from viscoshift import cli
from viscoshift import models as M
from viscoshift.evaluation import improvement, read_report_json, aggregate

PROFILES = {
    "smoke": {"epochs": 50, "seeds": [0]},
    "full": {"epochs": 550, "seeds": [0, 1, 2]},
}

# babbling seeds: the two domains draw disjoint, unpaired command streams
SEED_C, SEED_S, VAL_OFFSET = 0, 10_000, 1_000

FORWARD_CONFIG: dict = {}  # library defaults


def step(name, outputs, argv):
    if all(Path(p).exists() for p in outputs):
        print(f"[skip] {name}")
        return
    print(f"[run ] {name}: viscoshift {' '.join(map(str, argv))}", flush=True)
    start = time.time()
    code = cli.run(["-v", *(str(a) for a in argv)])
    if code != 0:
        sys.exit(f"{name} failed with exit code {code}")
    print(f"[done] {name} in {time.time() - start:.0f} s", flush=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--profile", choices=sorted(PROFILES), default="smoke")
    ap.add_argument("--out", type=Path)
    ap.add_argument("--seeds", type=int, nargs="+")
    ap.add_argument("--epochs", type=int)
    ap.add_argument("--skip-baseline", action="store_true")
    args = ap.parse_args()
    profile = PROFILES[args.profile]
    seeds = args.seeds or profile["seeds"]
    epochs = args.epochs or profile["epochs"]
    out = args.out or Path("runs") / args.profile
    out.mkdir(parents=True, exist_ok=True)
    data = out / "data"

    # 1. datasets and workspace normalization
    for domain, seed in (("standard", SEED_S), ("constrained", SEED_C)):
        step(f"babble {domain}", [data / f"{domain}.csv"],
             ["babble", "--domain", domain, "--trajectories", 50, "--seed", seed, "--out", data / f"{domain}.csv"])
        step(f"validation {domain}", [data / f"{domain}_val.csv"],
             ["babble", "--domain", domain, "--trajectories", 3, "--seed", seed + VAL_OFFSET,
              "--out", data / f"{domain}_val.csv"])
        step(f"norms {domain}", [data / f"norms_{domain}.json"],
             ["norms", "--domain", domain, "--out", data / f"norms_{domain}.json"])

    # 2. forward model of the constrained arm
    fwd_cfg = out / "forward_config.json"
    fwd_cfg.write_text(json.dumps(FORWARD_CONFIG, indent=2) + "\n")
    fwd = out / "forward"
    step("forward model", [fwd / "forward.weights.bin"],
         ["train-forward", "--data", data / "constrained.csv", "--val", data / "constrained_val.csv",
          "--norms", data / "norms_constrained.json", "--config", fwd_cfg, "--out", fwd])

    # 3. translators
    common = ["--fwd-c", fwd / "forward", "--norms-c", data / "norms_constrained.json", "--epochs", epochs]
    for seed in seeds:
        step(f"ccgan seed {seed}", [out / f"ccgan_{seed}" / "G_c.weights.bin"],
             ["train-ccgan", "--data-s", data / "standard.csv", "--data-c", data / "constrained.csv",
              "--val-s", data / "standard_val.csv", "--norms-s", data / "norms_standard.json", *common,
              "--seed", seed, "--out", out / f"ccgan_{seed}"])
        if not args.skip_baseline:
            step(f"baseline seed {seed}", [out / f"baseline_{seed}" / "G.weights.bin"],
                 ["train-baseline", "--data-c", data / "constrained.csv", "--val-c", data / "constrained_val.csv",
                  *common, "--seed", seed, "--out", out / f"baseline_{seed}"])

    # 4. evaluation on the constrained plant
    generators = [out / f"ccgan_{s}" / "G_c" for s in seeds]
    baselines = [] if args.skip_baseline else ["--baseline", *[out / f"baseline_{s}" / "G" for s in seeds]]
    step("evaluation", [out / "report" / "report.json"],
         ["evaluate", "--generator", *generators, *baselines, "--all", "--seeds", *seeds,
          "--noise-std", 0.1, 0.3, 0.5, "--repeats", 5, "--out", out / "report"])

    summarize(out, seeds, epochs)


def summarize(out: Path, seeds, epochs):
    fwd = M.load(out / "forward" / "forward")
    entries = read_report_json(out / "report" / "report.json")
    table = {}
    for a in aggregate(entries):
        table.setdefault(a.shape, {})[f"{a.condition}@{a.noise_std:g}"] = {
            "x_err_median_cm": a.x_err_median_cm,
            "phi_err_median_rad": a.phi_err_median_rad,
            "x_err_mean_cm": a.x_err_mean_cm,
            "n": a.n,
        }
    curves = {}
    for s in seeds:
        with open(out / f"ccgan_{s}" / "history.csv") as fh:
            header = fh.readline().strip().split(",")
            col = header.index("val_feedback_position_error")
            curves[s] = [float(line.split(",")[col]) for line in fh]
    results = {
        "epochs": epochs,
        "seeds": list(seeds),
        "forward_val_position_rmse_m": fwd.metadata["val_position_rmse_m"],
        "shapes": table,
        "val_feedback_error": {str(k): v for k, v in curves.items()},
        "periodicity": json.loads((out / "report" / "periodicity.json").read_text()),
    }
    (out / "results.json").write_text(json.dumps(results, indent=1) + "\n")

    print(f"\nforward model rollout RMSE: {100 * results['forward_val_position_rmse_m']:.3f} cm")
    print(f"{'shape':<15}{'ccgan':>10}{'baseline':>10}{'direct':>10}{'improve':>9}{'phi ccgan':>11}")
    for shape, row in table.items():
        cc = row.get("ccgan@0", {}).get("x_err_median_cm", np.nan)
        bl = row.get("baseline@0", {}).get("x_err_median_cm", np.nan)
        dt = row.get("direct-transfer@0", {}).get("x_err_median_cm", np.nan)
        phi = row.get("ccgan@0", {}).get("phi_err_median_rad", np.nan)
        print(f"{shape:<15}{cc:>10.3f}{bl:>10.3f}{dt:>10.3f}{improvement(cc, dt):>9.2f}{phi:>11.3f}")
    for s, curve in curves.items():
        print(f"seed {s}: validation feedback error {curve[0]:.4f} -> {curve[-1]:.4f} m")


if __name__ == "__main__":
    main()
