import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelcs.errors import AsymmetricMatrix, DimensionMismatch, InvalidParameter, ParseError
from abelcs.matrix import IntMatrix
from abelcs.surgery import (
    SurgeryPresentation,
    block_sum,
    catalog,
    lens,
    parse_catalog_spec,
    parse_presentation,
    serialize,
)
from conftest import M26_ROWS, symmetric_matrices

M26_TEXT = "3\n-3 1 1\n1 3 1\n1 1 -1\n"


class TestParse:
    def test_m26_plain(self):
        P = parse_presentation(M26_TEXT)
        assert P.linking_matrix.to_rows() == M26_ROWS
        assert P.m == 3

    def test_bytes_input(self):
        assert parse_presentation(M26_TEXT.encode()) == parse_presentation(M26_TEXT)

    def test_sphere(self):
        P = parse_presentation("1\n1\n")
        assert P.linking_matrix == IntMatrix.from_rows([[1]])

    def test_zero_diagonal_accepted(self):
        assert parse_presentation("2\n0 1\n1 1\n").linking_matrix.is_symmetric()

    def test_empty_link(self):
        P = parse_presentation("# the 3-sphere\n0\n")
        assert P.m == 0

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\n3\n# inside\n-3 1 1\n1 3 1\n\n1 1 -1\n"
        assert parse_presentation(text).linking_matrix.to_rows() == M26_ROWS

    def test_name_comment(self):
        P = parse_presentation("# name: M(2,6)\n" + M26_TEXT)
        assert P.name == "M(2,6)"
        assert parse_presentation(M26_TEXT, name="fallback").name == "fallback"

    def test_json(self):
        P = parse_presentation('{"name": "m26", "linking_matrix": [[-3,1,1],[1,3,1],[1,1,-1]]}', "json")
        assert P.name == "m26"
        assert P.linking_matrix.to_rows() == M26_ROWS

    def test_parse_error_location(self):
        with pytest.raises(ParseError) as info:
            parse_presentation("2\n1 x\n1 1\n")
        assert info.value.line == 2 and info.value.column == 3

    @pytest.mark.parametrize("text", ["", "# only comments\n", "2 2\n1 0\n0 1\n", "-1\n", "1.5\n1\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_presentation(text)

    def test_asymmetric(self):
        with pytest.raises(AsymmetricMatrix):
            parse_presentation("2\n0 1\n2 1\n")

    @pytest.mark.parametrize("text", ["2\n1 0\n", "2\n1 0\n0 1 3\n", "1\n1\n2\n"])
    def test_dimension_mismatch(self, text):
        with pytest.raises(DimensionMismatch):
            parse_presentation(text)

    @pytest.mark.parametrize("doc", [
        "{", "[]", '{"name": 3, "linking_matrix": [[1]]}',
        '{"linking_matrix": [[1.5]]}', '{"linking_matrix": [[true]]}', '{"linking_matrix": 1}',
    ])
    def test_json_malformed(self, doc):
        with pytest.raises(ParseError):
            parse_presentation(doc, "json")

    def test_json_not_square(self):
        with pytest.raises(DimensionMismatch):
            parse_presentation('{"linking_matrix": [[1, 0]]}', "json")


class TestSerialize:
    def test_plain_single_trailing_newline(self):
        text = serialize(SurgeryPresentation.from_rows(M26_ROWS))
        assert text == M26_TEXT

    @given(symmetric_matrices(max_dim=4, bound=50),
           st.one_of(st.none(), st.text("abcdefgh0123(),# ", min_size=1, max_size=10).map(str.strip).filter(bool)))
    def test_roundtrip(self, L, name):
        P = SurgeryPresentation(L, name)
        for fmt in ("plain", "json"):
            assert parse_presentation(serialize(P, fmt), fmt) == P


class TestCatalog:
    def test_sphere(self):
        assert catalog("sphere").linking_matrix.to_rows() == [[1]]

    def test_lens(self):
        assert catalog("lens", 2).linking_matrix.to_rows() == [[2]]

    @pytest.mark.parametrize("p", [0, -3, 2.0, True])
    def test_lens_invalid(self, p):
        with pytest.raises(InvalidParameter):
            lens(p)

    def test_m26_matches_fixture(self):
        P = catalog("m26")
        assert P.linking_matrix == parse_presentation(M26_TEXT).linking_matrix
        assert serialize(SurgeryPresentation(P.linking_matrix)) == M26_TEXT

    def test_block_sum(self):
        P = catalog("block_sum", [lens(2), lens(3)])
        assert P.linking_matrix == IntMatrix.diagonal([2, 3])
        assert block_sum([]).m == 0

    def test_spec_strings(self):
        assert parse_catalog_spec("lens:2+lens:3").linking_matrix == IntMatrix.diagonal([2, 3])
        assert parse_catalog_spec("m26").linking_matrix.to_rows() == M26_ROWS
        for bad in ("lens", "lens:x", "torus", "sphere:2"):
            with pytest.raises(InvalidParameter):
                parse_catalog_spec(bad)

    def test_unknown(self):
        with pytest.raises(InvalidParameter):
            catalog("poincare")
