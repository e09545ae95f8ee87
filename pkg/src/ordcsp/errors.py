"""Exception types shared across the package.

The CLI maps these onto exit codes: schema/usage problems exit with 2,
exceeded caps and budgets with 3.
"""


class SchemaError(ValueError):
    """An input file or value does not match its documented schema."""


class FormulaError(SchemaError):
    """Formula text could not be parsed; carries the character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SignatureMismatch(SchemaError):
    """A constraint or relation refers to an unknown symbol or wrong arity."""


class CapExceeded(RuntimeError):
    """A configured size or budget cap was exceeded."""


class EqualityNotEquivalence(SchemaError):
    """The equality formula of an interpretation is not an equivalence
    relation on the sampled grid."""


class EqualityNotCongruence(SchemaError):
    """The equality formula of an interpretation is not a congruence for
    some relation formula on the sampled grid."""


class VerificationFailed(RuntimeError):
    """A witness produced by the declared semilattice fold failed the
    homomorphism check; the declared operation does not preserve the
    template's relations."""
