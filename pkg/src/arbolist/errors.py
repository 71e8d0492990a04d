"""Exception types shared across the package."""

from __future__ import annotations


class ArbolistError(Exception):
    """Base class for every error this library raises on bad input."""


class SelfLoopError(ArbolistError):
    def __init__(self, u: int):
        super().__init__(f"self loop at vertex {u}")
        self.u = u


class DuplicateEdgeError(ArbolistError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u = u
        self.v = v


class VertexOutOfRangeError(ArbolistError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} out of range for n={n}")
        self.v = v
        self.n = n


class MissingLabelsError(ArbolistError):
    """The operation needs a part label for every vertex."""


class KTooSmallError(ArbolistError):
    def __init__(self, k: int, minimum: int = 2):
        super().__init__(f"k={k} is below the smallest supported value {minimum}")
        self.k = k


class TooLargeError(ArbolistError):
    """Input exceeds the size guard of a brute-force oracle."""


class NotPrimeError(ArbolistError):
    def __init__(self, q: int):
        super().__init__(f"q={q} is not prime")
        self.q = q


class TooManyEdgesError(ArbolistError):
    def __init__(self, m: int, limit: int):
        super().__init__(f"requested {m} edges but only {limit} distinct pairs exist")
        self.m = m
        self.limit = limit


class NotTripartiteError(ArbolistError):
    """The input graph is not labelled as a proper tripartition."""


class BadSigmaError(ArbolistError):
    def __init__(self, sigma: float):
        super().__init__(f"sigma={sigma} outside the open interval (0, 0.5)")
        self.sigma = sigma


class BadModulusError(ArbolistError):
    """The modulus is not prime or not large enough for the weight range."""


class BadSError(ArbolistError):
    def __init__(self, s: int, p: int):
        super().__init__(f"s={s} outside the valid range 1..{p}")
        self.s = s
        self.p = p


class BadEpsilonError(ArbolistError):
    def __init__(self, epsilon: float):
        super().__init__(f"epsilon={epsilon} outside the open interval (0, 1)")
        self.epsilon = epsilon


class ParseError(ArbolistError):
    def __init__(self, path: str, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno
