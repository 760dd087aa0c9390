"""Exception hierarchy shared by all modules.

``DomainError`` subclasses signal mathematically meaningful failures
(exit code 2 in the CLI); plain ``ValueError``/``OSError`` style failures
keep their usual meaning (exit code 1).
"""


class DomainError(Exception):
    """A well-formed request that has no answer in the supported domain."""

    code = "domain-error"

    def context(self) -> dict:
        return {}


class UnfactoredRemainder(DomainError):
    """Factorization got stuck on a factor of degree >= 4 with no hint."""

    code = "unfactored-remainder"

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"cannot certify factorization of residual {residual}")

    def context(self) -> dict:
        return {"residual": [str(c) for c in self.residual.coeffs]}


class ConventionError(DomainError):
    """The epsilon=0 companion convention was requested where it is undefined."""

    code = "convention-error"


class HeisenbergDeferred(DomainError):
    """Aut/Der of the Heisenberg algebra are intentionally not computed here."""

    code = "heisenberg-deferred"

    def __init__(self):
        super().__init__(
            "automorphisms/derivations of the Heisenberg algebra are out of scope"
        )


class DecomposableUnsupported(DomainError):
    """Aut/Der of a decomposable algebra must go through compose_decomposable."""

    code = "decomposable-unsupported"


class ZeroMultiplicityFunction(DomainError):
    """An operation that assumes a non-Abelian algebra got the zero function."""

    code = "zero-multiplicity-function"


class OracleCapExceeded(DomainError):
    """The brute-force solver refused a system above its unknown-count cap."""

    code = "oracle-cap-exceeded"
