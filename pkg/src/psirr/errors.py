"""Exception hierarchy.

Errors split into two families: ``InputError`` for problems with what the
caller supplied (CLI exit code 1) and ``InternalAssertion`` for states that
the mathematics says are unreachable (CLI exit code 2).
"""

from __future__ import annotations


class PsirrError(Exception):
    code = "error"


class InputError(PsirrError):
    code = "input_error"


class InternalAssertion(PsirrError):
    code = "internal_assertion"


class DegeneratePolynomial(InputError):
    """Raised for P = Z^d, which has no associated polyhedron."""

    code = "degenerate_polynomial"


class TruncationTooSmall(InputError):
    code = "truncation_too_small"


class DegreeBoundExceeded(PsirrError):
    """Rational factorization was asked to decide a degree above the bound."""

    code = "degree_bound_exceeded"

    def __init__(self, degree: int, bound: int):
        super().__init__(f"squarefree part of degree {degree} exceeds bound {bound}")
        self.degree = degree
        self.bound = bound


class NotCoprimeSeeds(InputError):
    code = "not_coprime_seeds"


class CharacteristicTwo(InputError):
    code = "characteristic_two"


class NotApplicable(InputError):
    code = "not_applicable"


class ParseError(InputError):
    code = "syntax_error"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NotMonicInZ(InputError):
    code = "not_monic_in_z"


class UnknownVariable(InputError):
    code = "unknown_variable"


class SupportOffLattice(InternalAssertion):
    code = "support_off_lattice"


class NegativeExponent(InternalAssertion):
    code = "negative_exponent"


class RecompositionFailure(InternalAssertion):
    code = "recomposition_failure"


class LatticeViolation(InternalAssertion):
    code = "lattice_violation"

    def __init__(self, term, q: int):
        super().__init__(f"exponent {term} is not divisible by q={q}")
        self.term = term
        self.q = q


class VerificationFailed(InternalAssertion):
    code = "verification_failed"

    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term
