"""Exception hierarchy. Every error carries a stable ``code`` token."""

from __future__ import annotations


class LandscapeError(Exception):
    code = "error"


class InvalidParameter(LandscapeError, ValueError):
    code = "invalid-parameter"


class UnknownNode(LandscapeError, KeyError):
    code = "unknown-node"

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return Exception.__str__(self)


class InvalidComparison(LandscapeError, ValueError):
    code = "invalid-comparison"


class OracleTooLarge(LandscapeError):
    code = "oracle-too-large"


class InvalidDecomposition(LandscapeError, ValueError):
    code = "invalid-decomposition"


class NotATree(LandscapeError, ValueError):
    code = "not-a-tree"


class NotAForest(LandscapeError, ValueError):
    code = "not-a-forest"


class ParseError(LandscapeError, ValueError):
    code = "parse-error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedMachine(LandscapeError, ValueError):
    code = "malformed-machine"


class Timeout(LandscapeError):
    code = "timeout"

    def __init__(self, message: str, config=None):
        super().__init__(message)
        self.config = config


class AlphabetConflict(LandscapeError):
    code = "alphabet-conflict"


class ProfileIncomplete(LandscapeError):
    code = "profile-incomplete"

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InvalidLabeling(LandscapeError, ValueError):
    code = "invalid-labeling"


class NonTermination(LandscapeError):
    code = "nontermination"

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InvalidMutation(LandscapeError, ValueError):
    code = "invalid-mutation"


class CannotBuild(LandscapeError):
    code = "cannot-build"
