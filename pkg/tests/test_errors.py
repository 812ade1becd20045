"""Tests for the error hierarchy."""

import pytest

from multibrot.errors import (
    BracketError,
    InvalidDegreeError,
    InvalidParameterError,
    MultibrotError,
    RenderOutputError,
    ScanError,
)

pytestmark = pytest.mark.unit


class TestErrorCodes:
    """Each error fills a machine code and a readable message"""

    def test_invalid_degree(self):
        error = InvalidDegreeError(1, "must be an integer >= 2")
        assert error.code == "INVALID_DEGREE"
        assert "d=1" in error.message
        assert isinstance(error, MultibrotError)

    def test_invalid_parameter(self):
        error = InvalidParameterError("c", -1.0, "must be a finite nonnegative real")
        assert error.code == "INVALID_PARAMETER"
        assert "c=-1.0" in error.message

    def test_bracket(self):
        error = BracketError(3, 0.1, 0.2)
        assert error.code == "ROOT_NOT_BRACKETED"
        assert error.lower == 0.1 and error.upper == 0.2

    def test_scan(self):
        error = ScanError(3, "minus", 1.9)
        assert error.code == "SCAN_UPPER_BOUND_BOUNDED"
        assert "t=1.9" in error.message

    def test_render_output_with_details(self):
        error = RenderOutputError("/nowhere/m3.pgm", "No such file or directory")
        assert error.code == "RENDER_OUTPUT_FAILED"
        assert "/nowhere/m3.pgm" in error.message
        assert error.message.endswith("No such file or directory")

    def test_render_output_without_details(self):
        error = RenderOutputError("out.pgm")
        assert error.message == "Cannot write image to 'out.pgm'"


def test_to_dict_envelope():
    """to_dict wraps code and message in an error object."""
    error = InvalidDegreeError(1.5, "must be >= 2")
    assert error.to_dict() == {
        "error": {"code": "INVALID_DEGREE", "message": error.message}
    }


def test_errors_are_exceptions():
    with pytest.raises(MultibrotError) as exc_info:
        raise ScanError(2, "plus", 2.5)
    assert str(exc_info.value) == exc_info.value.message
