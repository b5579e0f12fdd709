"""
Unit tests for error handling and custom exceptions
"""

import pytest

from vpflab.core.errors import (
    ConfigurationError,
    DegenerateInputError,
    OutputError,
    PipelineError,
    TruncationError,
    ValidationError,
    VpfLabError,
)


class TestVpfLabError:
    """Test base error class"""

    def test_basic_error(self):
        """Test basic error creation"""
        error = VpfLabError("Something went wrong")
        assert str(error) == "VPFLAB_ERROR: Something went wrong"
        assert error.message == "Something went wrong"
        assert error.error_code == "VPFLAB_ERROR"
        assert error.details == {}

    def test_error_with_code_and_details(self):
        """Test error with custom code and details"""
        error = VpfLabError("Custom error", error_code="CUSTOM_CODE", details={"key": "value"})
        assert error.error_code == "CUSTOM_CODE"
        assert str(error) == "CUSTOM_CODE: Custom error - {'key': 'value'}"


class TestValidationError:
    """Test validation error"""

    def test_validation_error_basic(self):
        """Test basic validation error"""
        error = ValidationError("Invalid input")
        assert error.error_code == "VALIDATION_ERROR"
        assert error.field is None
        assert error.details == {}

    def test_validation_error_with_field_and_value(self):
        """Test validation error with field and value"""
        error = ValidationError("q out of range", field="q1", value=40)
        assert error.field == "q1"
        assert error.value == 40
        assert error.details == {"field": "q1", "value": 40}

    def test_value_zero_is_recorded(self):
        """A falsy value is still recorded"""
        error = ValidationError("bad", field="count", value=0)
        assert error.details["value"] == 0


class TestDomainErrors:
    """Test the remaining error classes"""

    def test_configuration_error(self):
        """Test configuration error"""
        error = ConfigurationError("Unknown key", config_key="colour")
        assert error.error_code == "CONFIGURATION_ERROR"
        assert error.details["config_key"] == "colour"

    def test_truncation_error(self):
        """Test truncation error carries terms and tail mass"""
        error = TruncationError("Too many terms", terms=2_000_000, tail_mass=1e-3)
        assert error.error_code == "TRUNCATION_ERROR"
        assert error.terms == 2_000_000
        assert error.details == {"terms": 2_000_000, "tail_mass": 1e-3}

    def test_degenerate_input_error(self):
        """Test degenerate input error"""
        error = DegenerateInputError("Constant input", statistic="corr")
        assert error.error_code == "DEGENERATE_INPUT_ERROR"
        assert error.statistic == "corr"

    def test_pipeline_error(self):
        """Test pipeline error"""
        error = PipelineError("Incomplete bundle", stage="second_pass")
        assert error.error_code == "PIPELINE_ERROR"
        assert error.details["stage"] == "second_pass"

    def test_output_error(self):
        """Test output error"""
        error = OutputError("Cannot write", path="/nonexistent/out.csv")
        assert error.error_code == "OUTPUT_ERROR"
        assert error.path == "/nonexistent/out.csv"

    @pytest.mark.parametrize(
        "error_class",
        [
            ValidationError,
            ConfigurationError,
            TruncationError,
            DegenerateInputError,
            PipelineError,
            OutputError,
        ],
    )
    def test_inheritance(self, error_class):
        """All errors derive from VpfLabError"""
        error = error_class("Test")
        assert isinstance(error, VpfLabError)
        assert isinstance(error, Exception)

    @pytest.mark.parametrize(
        "error_class,attribute",
        [
            (ConfigurationError, "config_key"),
            (TruncationError, "tail_mass"),
            (DegenerateInputError, "statistic"),
            (PipelineError, "stage"),
            (OutputError, "path"),
        ],
    )
    def test_unset_context_is_none(self, error_class, attribute):
        """Context left unset is exposed as None and kept out of details"""
        error = error_class("Test", details={"extra": 1})
        assert getattr(error, attribute) is None
        assert error.details == {"extra": 1}
