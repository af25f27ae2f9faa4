"""Command line interface.

Subcommands: synth, segment, features, enroll, identify, experiment,
validate. Failures exit nonzero after printing a one-line JSON error record
to stderr. ``--config FILE`` loads defaults from a JSON object; explicit
flags override config values.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import image_io
from .classify import (
    ClassifierConfig,
    FeatureVector,
    LabeledVector,
    fit_normalizer,
    knn_classify,
    load_templates,
    save_templates,
    to_record,
)
from .dataset import format_subject_filename, parse_subject_filename
from .errors import VsignError
from .experiment import ExperimentConfig, emit_report, run_experiment, run_validation
from .imaging import downscale
from .pipeline import extract_dataset, extract_features
from .segmentation import PixelModel, segment
from .synth import SynthConfig, generate_synthetic_dataset

log = logging.getLogger(__name__)


def _add_seg_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seg", default=None, choices=["otsu", "kmeans", "pixel"], help="segmentation route")
    p.add_argument("--seg-metric", default=None, help="distance for kmeans/pixel routes (ed/md/hd)")
    p.add_argument("--model", default=None, help="pixel classifier model JSON (for --seg pixel)")
    p.add_argument("--downscale", type=float, default=None, help="box-average shrink factor applied before segmentation")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vsign", description="Two-finger hand silhouette identification toolkit.")
    ap.add_argument("--config", default=None, help="JSON file with default values for any flag")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="render a synthetic labeled dataset of hand captures")
    p.add_argument("--out", required=True, help="output directory for PNG files")
    p.add_argument("--subjects", type=int, default=None)
    p.add_argument("--images-per-session", type=int, default=None)
    p.add_argument("--sessions", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--rotation", type=float, default=None, help="max per-image rotation in degrees")
    p.add_argument("--noise", type=float, default=None, help="salt-and-pepper pixel fraction")
    p.add_argument("--angle-drift", type=float, default=None, help="session-2 inter-finger angle drift in degrees")

    p = sub.add_parser("segment", help="segment one capture into a binary mask")
    p.add_argument("image")
    p.add_argument("--out", required=True, help="output mask path (PNG or PGM)")
    _add_seg_flags(p)

    p = sub.add_parser("features", help="extract feature vectors from a capture or a directory")
    p.add_argument("path", help="one image or a directory of convention-named images")
    p.add_argument("--out", required=True, help="output JSON-lines feature file")
    p.add_argument("--method", default=None, choices=["m1", "m2", "m3", "M1", "M2", "M3"])
    _add_seg_flags(p)

    p = sub.add_parser("enroll", help="build a template store from a feature file")
    p.add_argument("features", help="JSON-lines feature file")
    p.add_argument("--out", required=True, help="template store path (.jsonl); stats saved alongside")

    p = sub.add_parser("identify", help="match one capture against a template store")
    p.add_argument("image")
    p.add_argument("--store", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--metric", default=None)
    p.add_argument("--normalize", action=argparse.BooleanOptionalAction, default=None)
    _add_seg_flags(p)

    p = sub.add_parser("experiment", help="within-session accuracy protocol")
    p.add_argument("path", help="image directory or JSON-lines feature file with session fields")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.add_argument("--method", default=None, choices=["m1", "m2", "m3", "M1", "M2", "M3"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--metric", default=None)
    p.add_argument("--runs", type=int, default=None)
    p.add_argument("--test-fraction", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--normalize", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--format", default=None, choices=["csv", "json"])
    _add_seg_flags(p)

    p = sub.add_parser("validate", help="cross-session accuracy: train on one set, test on another")
    p.add_argument("train", help="image directory or feature file (enrollment session)")
    p.add_argument("test", help="image directory or feature file (probe session)")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.add_argument("--method", default=None, choices=["m1", "m2", "m3", "M1", "M2", "M3"])
    p.add_argument("--metric", default=None, help="one metric (ed/md/hd) or 'all'")
    p.add_argument("--normalize", action=argparse.BooleanOptionalAction, default=None)
    _add_seg_flags(p)
    return ap


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    """Fill None-valued flags from the optional JSON config file."""
    if not args.config:
        return args
    conf = json.loads(Path(args.config).read_text())
    if not isinstance(conf, dict):
        raise ValueError("config file must hold a JSON object")
    for key, value in conf.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) is None:
            setattr(args, attr, value)
    return args


def _val(args, name, default):
    v = getattr(args, name, None)
    return default if v is None else v


def _load_image(args, path):
    img = image_io.read_rgb(path)
    factor = _val(args, "downscale", None)
    if factor is not None:
        img = downscale(img, float(factor))
    return img


def _pixel_model(args) -> PixelModel | None:
    path = _val(args, "model", None)
    return PixelModel.load(path) if path else None


def _seg_kwargs(args) -> dict:
    return {
        "seg": _val(args, "seg", "otsu"),
        "seg_metric": _val(args, "seg_metric", "euclidean"),
        "pixel_model": _pixel_model(args),
    }


def _feature_records_from_dir(args, directory: Path, method: str) -> list[dict]:
    files = sorted(p for p in directory.iterdir() if p.suffix.lower() in (".png", ".pgm", ".jpg", ".bmp"))
    if not files:
        raise VsignError(f"no images found in {directory}")
    items = []
    for f in files:
        meta = parse_subject_filename(f.name)
        items.append((_load_image(args, f), meta))
    extracted, skipped = extract_dataset(items, method=method, **_seg_kwargs(args))
    for meta, err in skipped:
        log.warning("skipped %s: %s", format_subject_filename(meta), err)
    records = []
    for vec, meta in extracted:
        rec = to_record(LabeledVector(vec, meta.label))
        rec.update(
            person=meta.person, gender=meta.gender, age=meta.age, session=meta.session, index=meta.image_index
        )
        records.append(rec)
    return records


def _labeled_dataset_from_path(args, path: Path, method: str) -> list[tuple]:
    """(FeatureVector, SubjectMeta-like) pairs from a directory or feature file."""
    from .dataset import SubjectMeta

    if path.is_dir():
        records = _feature_records_from_dir(args, path, method)
    else:
        records = [json.loads(line) for line in path.read_text().splitlines() if line.strip()]
    dataset = []
    for rec in records:
        if "session" not in rec:
            raise VsignError("feature record lacks a session field; re-extract with the features subcommand")
        meta = SubjectMeta(
            person=int(rec.get("person", rec["label"])),
            gender=rec.get("gender", "M"),
            age=int(rec.get("age", 0)),
            session=int(rec["session"]),
            image_index=int(rec.get("index", 1)),
        )
        dataset.append((FeatureVector(rec["method"], rec["values"]), meta))
    return dataset


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_synth(args) -> int:
    config = SynthConfig(
        rotation_deg=float(_val(args, "rotation", SynthConfig.rotation_deg)),
        noise_rate=float(_val(args, "noise", SynthConfig.noise_rate)),
        session_angle_drift_deg=float(_val(args, "angle_drift", SynthConfig.session_angle_drift_deg)),
    )
    data = generate_synthetic_dataset(
        num_subjects=int(_val(args, "subjects", 10)),
        images_per_session=int(_val(args, "images_per_session", 5)),
        sessions=int(_val(args, "sessions", 2)),
        seed=int(_val(args, "seed", 0)),
        config=config,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for img, meta in data:
        image_io.write_rgb(out / f"{format_subject_filename(meta)}.png", img)
    print(f"wrote {len(data)} images to {out}")
    return 0


def _cmd_segment(args) -> int:
    img = _load_image(args, args.image)
    mask = segment(img, method=_val(args, "seg", "otsu"), metric=_val(args, "seg_metric", "euclidean"), model=_pixel_model(args))
    image_io.write_mask(args.out, mask)
    print(f"wrote mask {args.out} ({int(mask.sum())} foreground pixels)")
    return 0


def _cmd_features(args) -> int:
    path = Path(args.path)
    method = str(_val(args, "method", "m3")).upper()
    if path.is_dir():
        records = _feature_records_from_dir(args, path, method)
    else:
        vec = extract_features(_load_image(args, path), method=method, **_seg_kwargs(args))
        records = [to_record(LabeledVector(vec, path.stem))]
    lines = [json.dumps(r) for r in records]
    Path(args.out).write_text("\n".join(lines) + "\n")
    print(f"wrote {len(records)} feature record(s) to {args.out}")
    return 0


def _cmd_enroll(args) -> int:
    records = [json.loads(line) for line in Path(args.features).read_text().splitlines() if line.strip()]
    templates = [LabeledVector(FeatureVector(r["method"], r["values"]), str(r["label"])) for r in records]
    save_templates(args.out, templates)
    stats = fit_normalizer(templates)
    stats_path = Path(args.out).with_suffix(".stats.json")
    stats_path.write_text(stats.to_json())
    print(f"enrolled {len(templates)} template(s) to {args.out}; stats in {stats_path}")
    return 0


def _cmd_identify(args) -> int:
    templates = load_templates(args.store)
    if not templates:
        raise VsignError(f"template store {args.store} is empty")
    method = templates[0].vector.method
    vec = extract_features(_load_image(args, args.image), method=method, **_seg_kwargs(args))
    cfg = ClassifierConfig(
        k=int(_val(args, "k", 1)),
        metric=_val(args, "metric", "hassanat"),
        normalize=bool(_val(args, "normalize", True)),
    )
    label, neighbors = knn_classify(templates, vec, cfg)
    print(
        json.dumps(
            {
                "predicted": label,
                "neighbors": [{"label": nb.label, "distance": nb.distance} for nb in neighbors],
            }
        )
    )
    return 0


def _cmd_experiment(args) -> int:
    method = str(_val(args, "method", "m3")).upper()
    dataset = _labeled_dataset_from_path(args, Path(args.path), method)
    cfg = ExperimentConfig(
        method=method,
        k=int(_val(args, "k", 1)),
        metric=_val(args, "metric", "hassanat"),
        test_fraction=float(_val(args, "test_fraction", 0.34)),
        runs=int(_val(args, "runs", 10)),
        seed=int(_val(args, "seed", 0)),
        normalize=bool(_val(args, "normalize", True)),
    )
    table = run_experiment(dataset, cfg)
    _write_or_print(emit_report(table, _val(args, "format", "csv")), args.out)
    return 0


def _cmd_validate(args) -> int:
    method = str(_val(args, "method", "m3")).upper()
    train_set = _labeled_dataset_from_path(args, Path(args.train), method)
    test_set = _labeled_dataset_from_path(args, Path(args.test), method)
    train = [LabeledVector(vec, meta.label) for vec, meta in train_set]
    test = [(vec, meta.label) for vec, meta in test_set]
    metric_arg = _val(args, "metric", "all")
    metrics = ["ED", "MD", "HD"] if str(metric_arg).lower() == "all" else [metric_arg]
    normalize = bool(_val(args, "normalize", True))
    lines = ["method,metric,accuracy"]
    for metric in metrics:
        acc = run_validation(train, test, metric=metric, normalize=normalize)
        from .metrics import metric_code

        lines.append(f"{method},{metric_code(metric)},{acc:.3f}")
    _write_or_print("\n".join(lines) + "\n", args.out)
    return 0


_COMMANDS = {
    "synth": _cmd_synth,
    "segment": _cmd_segment,
    "features": _cmd_features,
    "enroll": _cmd_enroll,
    "identify": _cmd_identify,
    "experiment": _cmd_experiment,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = _build_parser().parse_args(argv)
    try:
        args = _merge_config(args)
        return _COMMANDS[args.command](args)
    except Exception as err:  # report any failure as a machine-readable record
        record = {"error": type(err).__name__, "message": str(err)}
        print(json.dumps(record), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
