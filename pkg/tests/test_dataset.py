"""Capture filename convention: P<person>-<gender>-<age>-S<session> (<index>)."""

import pytest

from vsign import SubjectMeta, format_subject_filename, parse_subject_filename
from vsign.errors import MalformedNameError


class TestParse:
    def test_standard_name(self):
        meta = parse_subject_filename("P25-F-50-S1 (3)")
        assert meta == SubjectMeta(person=25, gender="F", age=50, session=1, image_index=3)

    def test_lowercase_markers(self):
        meta = parse_subject_filename("p14-M-14-s1 (1)")
        assert meta.person == 14
        assert meta.gender == "M"
        assert meta.age == 14
        assert meta.session == 1
        assert meta.image_index == 1

    def test_second_session(self):
        meta = parse_subject_filename("P35-M-35-S2 (3)")
        assert (meta.person, meta.session, meta.image_index) == (35, 2, 3)

    def test_same_age_different_person(self):
        meta = parse_subject_filename("P15-M-14-S2 (1)")
        assert (meta.person, meta.age, meta.session) == (15, 14, 2)

    def test_extension_and_path_stripped(self):
        meta = parse_subject_filename("/data/captures/P7-F-31-S2 (4).png")
        assert (meta.person, meta.image_index) == (7, 4)
        assert parse_subject_filename("P7-F-31-S2 (4).PGM").session == 2

    def test_label_is_person_string(self):
        assert parse_subject_filename("P25-F-50-S1 (3)").label == "25"

    @pytest.mark.parametrize(
        "name",
        [
            "hand_01.png",
            "25-F-50-S1 (3)",
            "P25-X-50-S1 (3)",
            "P25-F-50-S9 (3)",
            "P25-F-50-S1 (9)",
            "P25-F-50-S1",
            "P0-F-50-S1 (1)",
        ],
    )
    def test_malformed_names(self, name):
        with pytest.raises(MalformedNameError):
            parse_subject_filename(name)

    def test_error_names_offending_component(self):
        with pytest.raises(MalformedNameError, match="session"):
            parse_subject_filename("P25-F-50-S7 (3)")
        with pytest.raises(MalformedNameError, match="index"):
            parse_subject_filename("P25-F-50-S1 (8)")


class TestRoundTrip:
    def test_format_parse_identity(self):
        import numpy as np

        rng = np.random.default_rng(109)
        for _ in range(200):
            meta = SubjectMeta(
                person=int(rng.integers(1, 400)),
                gender=str(rng.choice(["M", "F"])),
                age=int(rng.integers(5, 90)),
                session=int(rng.integers(1, 3)),
                image_index=int(rng.integers(1, 6)),
            )
            assert parse_subject_filename(format_subject_filename(meta)) == meta

    def test_format_shape(self):
        meta = SubjectMeta(person=25, gender="F", age=50, session=1, image_index=3)
        assert format_subject_filename(meta) == "P25-F-50-S1 (3)"


class TestValidation:
    def test_bad_gender(self):
        with pytest.raises(ValueError):
            SubjectMeta(person=1, gender="Q", age=20, session=1, image_index=1)

    def test_bad_session(self):
        with pytest.raises(ValueError):
            SubjectMeta(person=1, gender="M", age=20, session=3, image_index=1)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            SubjectMeta(person=1, gender="M", age=20, session=1, image_index=0)
