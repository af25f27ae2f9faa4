"""Parametric two-finger hand renderer and dataset generator.

Each synthetic subject owns a fixed body geometry: two tapered capsule
fingers splayed around the horizontal axis, attached to an elliptical palm
on the right, drawn in a per-subject skin color on a black background with
the fingers pointing leftward. Per-image jitter (rotation, scale, integer
translation, salt-and-pepper noise, plus an inter-finger angle drift in
sessions after the first) models capture variation between photos of the
same hand.

Subject parameters are drawn from ranges wide enough to separate subjects
but are re-sampled until probe renders at the jitter extremes pass landmark
extraction and finger cutting, so the geometry preconditions hold by
construction for every emitted image. Everything is driven by seeded
generators: one seed reproduces a dataset byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import SubjectMeta
from .errors import VsignError
from .geometry import cut_fingers, find_keypoints

#: Canvas H x W, sized like a typical downscaled capture.
CANVAS = (306, 408)

#: Space kept between the two finger capsules where they meet the palm.
_WEB_GAP = 8.0
#: How far the palm ellipse reaches left past the finger attachment line.
_PALM_OVERLAP = 12.0


@dataclass(frozen=True)
class SubjectParams:
    """Body geometry of one synthetic subject (lengths in pixels)."""

    upper_finger_length: float
    lower_finger_length: float
    upper_finger_width: float
    lower_finger_width: float
    inter_finger_angle_deg: float  # full angle between the fingers, in (5, 40)
    palm_width: float
    palm_height: float
    skin_color: tuple[int, int, int]
    upper_taper: float = 0.85  # tip radius as a fraction of base radius
    lower_taper: float = 0.85

    def __post_init__(self):
        if not 5.0 < self.inter_finger_angle_deg < 40.0:
            raise ValueError(f"inter-finger angle must be in (5, 40) degrees, got {self.inter_finger_angle_deg}")


@dataclass(frozen=True)
class SynthConfig:
    """Jitter and canvas settings for dataset generation.

    rotation_deg bounds the per-image global rotation. The default stays
    well inside half the smallest inter-finger angle: beyond that the gap
    between the fingers no longer opens toward the left image edge and the
    valley landmark is undefined by construction.
    """

    canvas: tuple[int, int] = CANVAS
    rotation_deg: float = 6.0
    scale_range: tuple[float, float] = (0.9, 1.1)
    translate_px: int = 10
    noise_rate: float = 0.005  # fraction of pixels hit by salt/pepper
    session_angle_drift_deg: float = 3.0  # extra angle jitter from session 2 on


def capsule_mask(shape, p0, p1, r0, r1) -> np.ndarray:
    """Rasterize a tapered capsule: discs of radius r0..r1 swept from p0 to p1."""
    h, w = shape
    ys, xs = np.mgrid[0:h, 0:w]
    px = xs.astype(np.float64) - p0[0]
    py = ys.astype(np.float64) - p0[1]
    dx = p1[0] - p0[0]
    dy = p1[1] - p0[1]
    seg2 = dx * dx + dy * dy
    if seg2 == 0:
        t = np.zeros((h, w))
    else:
        t = np.clip((px * dx + py * dy) / seg2, 0.0, 1.0)
    cx = px - t * dx
    cy = py - t * dy
    r = r0 + (r1 - r0) * t
    return cx * cx + cy * cy <= r * r


def ellipse_mask(shape, center, semi_axes, angle_rad: float = 0.0) -> np.ndarray:
    """Rasterize a filled rotated ellipse."""
    h, w = shape
    ys, xs = np.mgrid[0:h, 0:w]
    qx = xs.astype(np.float64) - center[0]
    qy = ys.astype(np.float64) - center[1]
    c, s = math.cos(angle_rad), math.sin(angle_rad)
    ux = qx * c + qy * s
    uy = -qx * s + qy * c
    a, b = semi_axes
    return (ux / a) ** 2 + (uy / b) ** 2 <= 1.0


def _model_points(params: SubjectParams, angle_drift_deg: float = 0.0):
    """Finger segments, radii and palm of the hand in its local frame.

    Local frame: attachment line at x = 0, hand axis along x, y down;
    fingers run toward -x, splayed by half the inter-finger angle each way.
    """
    half = math.radians((params.inter_finger_angle_deg + angle_drift_deg) / 2.0)
    ru = params.upper_finger_width / 2.0
    rl = params.lower_finger_width / 2.0
    du = (_WEB_GAP + params.upper_finger_width) / 2.0
    dl = (_WEB_GAP + params.lower_finger_width) / 2.0
    upper = {
        "base": (0.0, -du),
        "tip": (-params.upper_finger_length * math.cos(half), -du - params.upper_finger_length * math.sin(half)),
        "r0": ru,
        "r1": ru * params.upper_taper,
    }
    lower = {
        "base": (0.0, dl),
        "tip": (-params.lower_finger_length * math.cos(half), dl + params.lower_finger_length * math.sin(half)),
        "r0": rl,
        "r1": rl * params.lower_taper,
    }
    palm_center = (params.palm_width / 2.0 - _PALM_OVERLAP, 0.0)
    palm_semi = (params.palm_width / 2.0, params.palm_height / 2.0)
    return upper, lower, palm_center, palm_semi


def render_hand_mask(
    params: SubjectParams,
    rotation_deg: float = 0.0,
    scale: float = 1.0,
    angle_drift_deg: float = 0.0,
    canvas: tuple[int, int] = CANVAS,
) -> np.ndarray:
    """Rasterize the subject's silhouette under a rigid jitter transform."""
    h, w = canvas
    upper, lower, palm_center, palm_semi = _model_points(params, angle_drift_deg)
    phi = math.radians(rotation_deg)
    c, s = math.cos(phi), math.sin(phi)
    # Anchor the model so its palm/finger junction sits right of center.
    anchor = (w * 0.58, h * 0.5)

    def put(p):
        x, y = p[0] * scale, p[1] * scale
        return (x * c - y * s + anchor[0], x * s + y * c + anchor[1])

    mask = capsule_mask((h, w), put(upper["base"]), put(upper["tip"]), upper["r0"] * scale, upper["r1"] * scale)
    mask |= capsule_mask((h, w), put(lower["base"]), put(lower["tip"]), lower["r0"] * scale, lower["r1"] * scale)
    mask |= ellipse_mask((h, w), put(palm_center), (palm_semi[0] * scale, palm_semi[1] * scale), phi)
    return mask


def _shift_mask(mask: np.ndarray, dx: int, dy: int, margin: int = 3) -> np.ndarray:
    """Translate a mask by whole pixels, clamped so the shape stays in frame."""
    h, w = mask.shape
    ys, xs = np.nonzero(mask)
    dx = int(np.clip(dx, margin - xs.min(), w - 1 - margin - xs.max()))
    dy = int(np.clip(dy, margin - ys.min(), h - 1 - margin - ys.max()))
    out = np.zeros_like(mask)
    out[ys + dy, xs + dx] = True
    return out


def _probe(params: SubjectParams, config: SynthConfig) -> bool:
    """True when landmark extraction works at the jitter corner cases."""
    rot = config.rotation_deg
    drift = config.session_angle_drift_deg
    lo, hi = config.scale_range
    combos = [(0.0, 1.0, 0.0)]
    for r in (-rot, rot):
        for sc in (lo, hi):
            for dr in (-drift, drift):
                combos.append((r, sc, dr))
    min_area = 350.0 * lo * lo
    for r, sc, dr in combos:
        try:
            mask = render_hand_mask(params, rotation_deg=r, scale=sc, angle_drift_deg=dr, canvas=config.canvas)
            kp = find_keypoints(mask)
            fingers = cut_fingers(mask, kp)
        except VsignError:
            return False
        if kp.valley.x <= max(kp.upper_tip.x, kp.lower_tip.x):
            return False
        if fingers.upper.sum() < min_area or fingers.lower.sum() < min_area:
            return False
    return True


#: Parameter ranges used by sample_subject, also defining the normalization
#: for the inter-subject separation test.
_PARAM_RANGES = {
    "inter_finger_angle_deg": (26.0, 39.0),
    "upper_finger_width": (15.0, 31.0),
    "lower_finger_width": (15.0, 31.0),
    "upper_finger_length": (95.0, 170.0),
    "lower_finger_length": (100.0, 185.0),
    "palm_width": (55.0, 95.0),
    "palm_height": (34.0, 70.0),
    "upper_taper": (0.62, 0.97),
    "lower_taper": (0.62, 0.97),
}


def _param_vector(params: SubjectParams) -> np.ndarray:
    """Subject geometry scaled to the unit cube of the sampling ranges."""
    out = []
    for name, (lo, hi) in _PARAM_RANGES.items():
        out.append((getattr(params, name) - lo) / (hi - lo))
    return np.asarray(out)


def sample_subject(
    rng: np.random.Generator,
    config: SynthConfig = SynthConfig(),
    max_tries: int = 200,
    avoid: list[np.ndarray] | None = None,
    min_sep: float = 0.0,
) -> SubjectParams:
    """Draw subject geometry, re-sampling until the probe renders pass.

    When ``avoid`` vectors are given, candidates closer than ``min_sep``
    (Euclidean, in normalized parameter space) to any of them are rejected
    as look-alikes; the requirement is dropped for the final quarter of the
    tries so the draw always terminates.
    """
    for attempt in range(max_tries):
        angle = float(rng.uniform(*_PARAM_RANGES["inter_finger_angle_deg"]))
        wu = float(rng.uniform(*_PARAM_RANGES["upper_finger_width"]))
        wl = float(rng.uniform(*_PARAM_RANGES["lower_finger_width"]))
        lu = float(rng.uniform(*_PARAM_RANGES["upper_finger_length"]))
        ll = float(rng.uniform(*_PARAM_RANGES["lower_finger_length"]))
        pw = float(rng.uniform(*_PARAM_RANGES["palm_width"]))
        # Palm height must stay below the fingertips' worst-case vertical
        # reach or a rotated palm corner would win the tip scans.
        worst = math.radians(angle / 2.0 - config.rotation_deg - config.session_angle_drift_deg / 2.0)
        reach = min(
            (_WEB_GAP + wu) / 2.0 + lu * math.sin(worst) + wu * 0.375,
            (_WEB_GAP + wl) / 2.0 + ll * math.sin(worst) + wl * 0.375,
        )
        ph_hi = 2.0 * (reach - pw / 2.0 * math.sin(math.radians(config.rotation_deg)) - 5.0)
        ph_lo, ph_cap = _PARAM_RANGES["palm_height"]
        if ph_hi < ph_lo:
            continue
        ph = float(rng.uniform(ph_lo, min(ph_hi, ph_cap)))
        r = int(rng.integers(150, 226))
        g = int(rng.integers(95, 186))
        b = int(rng.integers(70, 161))
        params = SubjectParams(
            upper_finger_length=lu,
            lower_finger_length=ll,
            upper_finger_width=wu,
            lower_finger_width=wl,
            inter_finger_angle_deg=angle,
            palm_width=pw,
            palm_height=ph,
            skin_color=(r, g, b),
            upper_taper=float(rng.uniform(*_PARAM_RANGES["upper_taper"])),
            lower_taper=float(rng.uniform(*_PARAM_RANGES["lower_taper"])),
        )
        if avoid and min_sep > 0.0 and attempt < max_tries - max_tries // 4:
            vec = _param_vector(params)
            if min(float(np.linalg.norm(vec - other)) for other in avoid) < min_sep:
                continue
        if _probe(params, config):
            return params
    raise VsignError(f"could not sample a probe-passing subject in {max_tries} tries")


def render_subject_image(
    params: SubjectParams, rng: np.random.Generator, session: int, config: SynthConfig = SynthConfig()
) -> np.ndarray:
    """One jittered RGB capture of a subject; consumes the given rng stream."""
    rotation = float(rng.uniform(-config.rotation_deg, config.rotation_deg))
    scale = float(rng.uniform(*config.scale_range))
    dx = int(rng.integers(-config.translate_px, config.translate_px + 1))
    dy = int(rng.integers(-config.translate_px, config.translate_px + 1))
    drift = 0.0
    if session >= 2 and config.session_angle_drift_deg > 0:
        drift = float(rng.uniform(-config.session_angle_drift_deg, config.session_angle_drift_deg))
    mask = render_hand_mask(params, rotation_deg=rotation, scale=scale, angle_drift_deg=drift, canvas=config.canvas)
    mask = _shift_mask(mask, dx, dy)

    img = np.zeros(mask.shape + (3,), dtype=np.uint8)
    img[mask] = params.skin_color
    n_noise = int(round(config.noise_rate * mask.size))
    if n_noise:
        flat = rng.choice(mask.size, size=n_noise, replace=False)
        values = np.where(rng.integers(0, 2, size=n_noise) == 1, 255, 0).astype(np.uint8)
        img.reshape(-1, 3)[flat] = values[:, None]
    return img


def generate_synthetic_dataset(
    num_subjects: int = 50,
    images_per_session: int = 5,
    sessions: int = 2,
    seed: int = 0,
    config: SynthConfig = SynthConfig(),
) -> list[tuple[np.ndarray, SubjectMeta]]:
    """Render a full labeled dataset, deterministically from the seed.

    Returns (image, meta) pairs ordered by subject, then session, then image
    index. Running twice with one seed yields byte-identical pixels.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    if not 1 <= images_per_session <= 5:
        raise ValueError("images_per_session must be in 1..5 (image indices are 1..5)")
    if sessions not in (1, 2):
        raise ValueError("sessions must be 1 or 2")
    out = []
    taken: list[np.ndarray] = []
    for person in range(1, num_subjects + 1):
        rng_subject = np.random.default_rng([seed, person])
        params = sample_subject(rng_subject, config, avoid=taken, min_sep=0.55)
        taken.append(_param_vector(params))
        gender = "M" if rng_subject.random() < 0.5 else "F"
        age = int(rng_subject.integers(10, 61))
        for session in range(1, sessions + 1):
            for index in range(1, images_per_session + 1):
                rng_img = np.random.default_rng([seed, person, session, index])
                img = render_subject_image(params, rng_img, session, config)
                meta = SubjectMeta(person=person, gender=gender, age=age, session=session, image_index=index)
                out.append((img, meta))
    return out
