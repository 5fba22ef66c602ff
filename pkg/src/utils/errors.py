"""
Error types raised by the obstruction pipeline.

Every error carries the pipeline stage it was raised in so that the command
line can report "<stage>: <message>".
"""


class ObstructionError(ValueError):
    """Base class for all pipeline errors."""

    stage = "compute"

    def __init__(self, message: str, stage: str = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage

    @property
    def message(self) -> str:
        return str(self.args[0]) if self.args else ""

    def to_dict(self):
        return {"stage": self.stage, "message": self.message}


class PDParseError(ObstructionError):
    """Malformed planar diagram code."""

    stage = "parse"


class DiagramError(ObstructionError):
    """A diagram that parses but cannot be processed."""

    stage = "diagram"


class MatrixError(ObstructionError):
    """An integer matrix that is not a valid knot form."""

    stage = "matrix"


class GroupError(ObstructionError):
    """Group-theoretic precondition failures."""

    stage = "group"


class OracleLimitError(ObstructionError):
    """Box oracle requested beyond its configured limits."""

    stage = "oracle"
