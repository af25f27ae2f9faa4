"""Run the two evaluation protocols on a generated corpus.

Within-session: each session's vectors are repeatedly split 34% test /
66% train (stratified so every subject stays enrollable) and scored with
KNN. Cross-session: train on all of session 1, test on all of session 2
with k=1. Prints the CSV report for one configuration and a small
method-by-metric accuracy grid.

Usage: python 05_benchmark_protocols.py [--subjects N] [--seed N]
"""

import argparse

import numpy as np

from vsign import (
    ExperimentConfig,
    LabeledVector,
    emit_report,
    extract_dataset,
    generate_synthetic_dataset,
    run_experiment,
    run_validation,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--subjects", type=int, default=10)
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args()

    data = generate_synthetic_dataset(
        num_subjects=args.subjects, images_per_session=5, sessions=2, seed=args.seed
    )
    extracted, skipped = extract_dataset(data, method="M3")
    print(f"extracted {len(extracted)}/{len(data)} captures ({len(skipped)} skipped)\n")

    table = run_experiment(extracted, ExperimentConfig(method="M3", k=1, metric="hassanat", runs=5, seed=args.seed))
    print("within-session protocol (M3, k=1, HD):")
    print(emit_report(table, "csv"))

    train = [LabeledVector(vec, meta.label) for vec, meta in extracted if meta.session == 1]
    test = [(vec, meta.label) for vec, meta in extracted if meta.session == 2]
    print("cross-session validation (k=1), all metrics:")
    for metric in ("euclidean", "manhattan", "hassanat"):
        acc = run_validation(train, test, metric=metric)
        print(f"  {metric:<10} {acc:.3f}")


if __name__ == "__main__":
    main()
