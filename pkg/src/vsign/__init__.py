"""Two-finger hand silhouette identification toolkit.

Pipeline: segment a capture into a binary hand mask, locate the five
contour landmarks, derive geometric and moment-based feature vectors, and
identify the subject with a k-nearest-neighbour matcher.
"""

from .classify import (
    CLAMP_HI,
    CLAMP_LO,
    METHOD_DIMS,
    ClassifierConfig,
    FeatureVector,
    LabeledVector,
    Neighbor,
    NormalizationStats,
    concat_features,
    fit_normalizer,
    knn_classify,
    load_templates,
    normalize,
    resolve_method,
    save_templates,
)
from .dataset import SubjectMeta, format_subject_filename, parse_subject_filename
from .errors import (
    ConstantImageError,
    DegenerateClustersError,
    DegenerateShapeError,
    DegenerateTipsError,
    DimensionMismatchError,
    EmptyMaskError,
    EmptyRegionError,
    EmptyTrainingSetError,
    FingerSeparationError,
    InsufficientExamplesError,
    MalformedNameError,
    MethodMismatchError,
    MissingClassError,
    NoValleyError,
    VsignError,
    ZeroDimensionError,
)
from .experiment import (
    ExperimentConfig,
    ResultRow,
    ResultTable,
    emit_report,
    parse_report,
    run_experiment,
    run_validation,
    split_session,
)
from .geometry import (
    FingerMasks,
    GeometricFeatures,
    KeyPoints,
    cut_fingers,
    find_keypoints,
    geometric_features,
    render_overlay,
    triangle_area,
)
from .image_io import (
    read_gray,
    read_mask,
    read_pgm,
    read_rgb,
    write_gray,
    write_mask,
    write_pgm,
    write_rgb,
)
from .imaging import (
    Point,
    contour,
    dilate,
    downscale,
    histogram,
    largest_component,
    luma,
    to_grayscale,
)
from .metrics import (
    METRIC_CODES,
    distance,
    euclidean,
    hassanat,
    manhattan,
    metric_code,
    pairwise,
    resolve_metric,
)
from .moments import (
    CentralMoments,
    HuDescriptor,
    NormalizedMoments,
    central_moments,
    eccentricity,
    finger_signature,
    hu_descriptor,
    hu_moments,
    normalized_moments,
)
from .pipeline import extract_dataset, extract_features
from .segmentation import (
    SEGMENTATION_METHODS,
    PixelModel,
    classify_pixels,
    kmeans_segment,
    otsu_threshold,
    segment,
    train_pixel_classifier,
)
from .synth import (
    SubjectParams,
    SynthConfig,
    capsule_mask,
    ellipse_mask,
    generate_synthetic_dataset,
    render_hand_mask,
    render_subject_image,
    sample_subject,
)

__version__ = "0.1.0"

__all__ = [
    "CLAMP_HI",
    "CLAMP_LO",
    "METHOD_DIMS",
    "METRIC_CODES",
    "SEGMENTATION_METHODS",
    "CentralMoments",
    "ClassifierConfig",
    "ConstantImageError",
    "DegenerateClustersError",
    "DegenerateShapeError",
    "DegenerateTipsError",
    "DimensionMismatchError",
    "EmptyMaskError",
    "EmptyRegionError",
    "EmptyTrainingSetError",
    "ExperimentConfig",
    "FeatureVector",
    "FingerMasks",
    "FingerSeparationError",
    "GeometricFeatures",
    "HuDescriptor",
    "InsufficientExamplesError",
    "KeyPoints",
    "LabeledVector",
    "MalformedNameError",
    "MethodMismatchError",
    "MissingClassError",
    "Neighbor",
    "NoValleyError",
    "NormalizationStats",
    "NormalizedMoments",
    "PixelModel",
    "Point",
    "ResultRow",
    "ResultTable",
    "SubjectMeta",
    "SubjectParams",
    "SynthConfig",
    "VsignError",
    "ZeroDimensionError",
    "capsule_mask",
    "central_moments",
    "classify_pixels",
    "concat_features",
    "contour",
    "cut_fingers",
    "dilate",
    "distance",
    "downscale",
    "eccentricity",
    "ellipse_mask",
    "emit_report",
    "euclidean",
    "extract_dataset",
    "extract_features",
    "find_keypoints",
    "finger_signature",
    "fit_normalizer",
    "format_subject_filename",
    "generate_synthetic_dataset",
    "geometric_features",
    "hassanat",
    "histogram",
    "hu_descriptor",
    "hu_moments",
    "kmeans_segment",
    "knn_classify",
    "largest_component",
    "load_templates",
    "luma",
    "manhattan",
    "metric_code",
    "normalize",
    "normalized_moments",
    "otsu_threshold",
    "pairwise",
    "parse_report",
    "parse_subject_filename",
    "read_gray",
    "read_mask",
    "read_pgm",
    "read_rgb",
    "render_hand_mask",
    "render_overlay",
    "render_subject_image",
    "resolve_method",
    "resolve_metric",
    "run_experiment",
    "run_validation",
    "sample_subject",
    "save_templates",
    "segment",
    "split_session",
    "to_grayscale",
    "train_pixel_classifier",
    "triangle_area",
    "write_gray",
    "write_mask",
    "write_pgm",
    "write_rgb",
]
