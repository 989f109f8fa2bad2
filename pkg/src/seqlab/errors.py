"""Exception types shared across the package."""

from __future__ import annotations


class SeqLabError(Exception):
    """Base class for domain errors raised by this package."""


class ZeroEntryError(SeqLabError):
    """p-part requested for a zero entry; carries the offending 1-based index."""

    def __init__(self, n: int):
        super().__init__(f"p-part undefined for zero entry at index {n}")
        self.n = n


class DegeneratePolynomialError(SeqLabError):
    """det(M^n - I) vanished: the polynomial has a root of unity among its zeros."""

    def __init__(self, n: int):
        super().__init__(f"det(M^n - I) = 0 at n = {n}; polynomial is degenerate")
        self.n = n


class DepthError(SeqLabError):
    """A table or sequence prefix is too short for the requested computation."""


class BFileError(SeqLabError):
    """Malformed b-file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class FixtureMissingError(SeqLabError):
    """Offline lookup failed: no bundled or cached b-file for the sequence."""


class FetchNetworkError(SeqLabError):
    """Network-level failure while fetching a b-file."""


class FetchHTTPError(SeqLabError):
    """Non-200 HTTP response while fetching a b-file."""

    def __init__(self, status: int, url: str):
        super().__init__(f"HTTP {status} for {url}")
        self.status = status
