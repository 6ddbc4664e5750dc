"""Error hierarchy shared by the library, the CLI and the HTTP service.

Every error carries a machine-readable ``code`` and the process exit status
the CLI uses when it is the reason a job stops.
"""


class GysinError(Exception):
    code = "gysin_error"
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self):
        return {"code": self.code, "message": self.message}


class ExpressionSyntaxError(GysinError):
    code = "parse_error"
    exit_code = 2

    def __init__(self, message: str, column: int, expected=()):
        self.column = column
        self.expected = tuple(sorted(expected))
        detail = f"{message} at column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class VariableRangeError(GysinError):
    code = "variable_out_of_range"
    exit_code = 3


class ArityError(GysinError):
    code = "arity_mismatch"
    exit_code = 4


class GeometryError(GysinError):
    code = "invalid_geometry"
    exit_code = 5


class PartitionError(GysinError):
    code = "invalid_partition"
    exit_code = 6


class InadmissiblePartitionError(PartitionError):
    code = "inadmissible_partition"
    exit_code = 7


class HalvingError(GysinError):
    code = "halve_not_allowed"
    exit_code = 8


class TermLimitError(GysinError):
    code = "term_limit_exceeded"
    exit_code = 9


class UnknownBundleError(GysinError):
    code = "unknown_bundle"
    exit_code = 10


class OracleUnavailableError(GysinError):
    code = "oracle_unavailable"
    exit_code = 11


class JobSpecError(GysinError):
    code = "invalid_job"
    exit_code = 12


class OracleMismatchError(GysinError):
    code = "oracle_mismatch"
    exit_code = 13


class InvalidArgumentError(GysinError, ValueError):
    code = "invalid_argument"
    exit_code = 14
