"""Subject metadata and the capture file naming convention.

Capture files are named ``P<person>-<gender>-<age>-S<session> (<index>)``,
for example ``P25-F-50-S1 (3).png``: person 25, female, 50 years old, first
session, third image. The P and S markers and the gender letter are matched
case-insensitively; an image file extension may follow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedNameError

_NAME_RE = re.compile(
    r"^[Pp](?P<person>\d+)-(?P<gender>[MmFf])-(?P<age>\d+)-[Ss](?P<session>\d+) \((?P<index>\d+)\)$"
)

#: Extensions stripped before parsing.
_IMAGE_SUFFIXES = (".png", ".pgm", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff")


@dataclass(frozen=True)
class SubjectMeta:
    person: int
    gender: str  # "M" or "F"
    age: int
    session: int  # 1 or 2
    image_index: int  # 1..5

    def __post_init__(self):
        if self.gender not in ("M", "F"):
            raise ValueError(f"gender must be M or F, got {self.gender!r}")
        if self.session not in (1, 2):
            raise ValueError(f"session must be 1 or 2, got {self.session}")
        if not 1 <= self.image_index <= 5:
            raise ValueError(f"image index must be in 1..5, got {self.image_index}")
        if self.age < 0 or self.person < 1:
            raise ValueError("person must be >= 1 and age >= 0")

    @property
    def label(self) -> str:
        """Identity label used for matching: the person number as a string."""
        return str(self.person)


def parse_subject_filename(name: str) -> SubjectMeta:
    """Parse a capture file name (with or without extension) into metadata.

    Raises MalformedNameError naming the offending component.
    """
    stem = str(name)
    stem = stem.rsplit("/", 1)[-1].rsplit("\\", 1)[-1]
    lower = stem.lower()
    for suffix in _IMAGE_SUFFIXES:
        if lower.endswith(suffix):
            stem = stem[: -len(suffix)]
            break
    m = _NAME_RE.match(stem)
    if m is None:
        raise MalformedNameError(f"{name!r} does not match 'P<person>-<gender>-<age>-S<session> (<index>)'")
    session = int(m.group("session"))
    if session not in (1, 2):
        raise MalformedNameError(f"{name!r}: session must be 1 or 2, got {session}")
    index = int(m.group("index"))
    if not 1 <= index <= 5:
        raise MalformedNameError(f"{name!r}: image index must be in 1..5, got {index}")
    person = int(m.group("person"))
    if person < 1:
        raise MalformedNameError(f"{name!r}: person number must be >= 1")
    return SubjectMeta(
        person=person,
        gender=m.group("gender").upper(),
        age=int(m.group("age")),
        session=session,
        image_index=index,
    )


def format_subject_filename(meta: SubjectMeta) -> str:
    """Canonical capture name (no extension) for a SubjectMeta."""
    return f"P{meta.person}-{meta.gender}-{meta.age}-S{meta.session} ({meta.image_index})"
