import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from precubical.core import (
    PrecubicalSet,
    circle,
    interval,
    standard_cube,
    tensor_product,
    torus,
)
from precubical.propcheck import GenConfig, random_precubical
from precubical.textformat import ParseError, parse, serialize

TORUS_DOC = """dims:
  0: o
  1: t1 t2
  2: v
faces:
  t1: [o, o]
  t2: [o, o]
  v: [t1, t1] [t2, t2]
"""


def test_torus_document_matches_builder():
    assert parse(TORUS_DOC) == torus()
    assert serialize(torus()) == TORUS_DOC


@pytest.mark.parametrize(
    "x",
    [
        interval(),
        circle(),
        torus(),
        standard_cube(0),
        standard_cube(2),
        tensor_product(torus(), circle()),
        PrecubicalSet([], {}),
        PrecubicalSet([3], {}, {0: ["a", "b", "c"]}),
    ],
    ids=["interval", "circle", "torus", "point", "square", "t3", "empty", "discrete"],
)
def test_canonical_round_trip(x):
    doc = serialize(x)
    assert parse(doc) == x
    assert serialize(parse(doc)) == doc


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5000))
def test_random_instances_round_trip(seed):
    x = random_precubical(GenConfig(seed=seed))
    doc = serialize(x)
    assert parse(doc) == x
    assert serialize(parse(doc)) == doc


def test_parse_tolerates_comments_and_spacing():
    doc = """# a torus
dims:
  0:   o
  1: t1   t2   # the two loops
  2: v
faces:
  t1: [ o , o ]
  t2: [o,o]

  v: [t1, t1]   [t2, t2]
"""
    assert parse(doc) == torus()


def test_empty_dims_gives_empty_set():
    x = parse("dims:\nfaces:\n")
    assert x.cube_counts == ()
    assert serialize(x) == "dims:\nfaces:\n"


def test_error_missing_label():
    doc = "dims:\n  0: a\n  1: e\nfaces:\n  e: [a, x]\n"
    with pytest.raises(ParseError, match=r"line 5.*missing label 'x'"):
        parse(doc)


def test_error_duplicate_label():
    with pytest.raises(ParseError, match="duplicate label"):
        parse("dims:\n  0: a a\nfaces:\n")
    with pytest.raises(ParseError, match="duplicate label"):
        parse("dims:\n  0: a\n  1: a\nfaces:\n")


def test_error_arity_mismatch():
    doc = "dims:\n  0: a\n  1: e\n  2: s\nfaces:\n  e: [a, a]\n  s: [e, e]\n"
    with pytest.raises(ParseError, match=r"lists 1 face pairs, expected 2"):
        parse(doc)


def test_error_wrong_dimension_reference():
    doc = "dims:\n  0: a\n  1: e f\n  2: s\nfaces:\n  e: [a, a]\n  f: [a, a]\n  s: [a, e] [f, f]\n"
    with pytest.raises(ParseError, match="dimension 0, expected 1"):
        parse(doc)


def test_error_missing_faces_entry():
    doc = "dims:\n  0: a\n  1: e\nfaces:\n"
    with pytest.raises(ParseError, match="no faces entry for cube 'e'"):
        parse(doc)


def test_error_faces_for_vertex():
    doc = "dims:\n  0: a\nfaces:\n  a: [a, a]\n"
    with pytest.raises(ParseError, match="vertex 'a' cannot have faces"):
        parse(doc)


def test_error_non_consecutive_dimensions():
    with pytest.raises(ParseError, match="expected dimension 1, got 2"):
        parse("dims:\n  0: a\n  2: s\nfaces:\n")


def test_error_duplicate_faces_entry():
    doc = "dims:\n  0: a\n  1: e\nfaces:\n  e: [a, a]\n  e: [a, a]\n"
    with pytest.raises(ParseError, match="duplicate faces entry"):
        parse(doc)


def test_error_junk_in_faces_line():
    doc = "dims:\n  0: a\n  1: e\nfaces:\n  e: [a, a] junk\n"
    with pytest.raises(ParseError, match="unexpected text"):
        parse(doc)


def test_error_missing_dims_header():
    with pytest.raises(ParseError):
        parse("faces:\n")
    with pytest.raises(ParseError):
        parse("")


def test_serialize_rejects_cross_dimension_duplicates():
    from precubical.core import CubeId

    # a loop whose edge reuses the vertex label
    o = CubeId(0, 0)
    x = PrecubicalSet([1, 1], {1: [[(o, o)]]}, {0: ["a"], 1: ["a"]})
    with pytest.raises(ValueError, match="unique"):
        serialize(x)
