"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class SgPatternsError(Exception):
    code = "Error"


# semigroups
class GcdNotOne(SgPatternsError):
    code = "GcdNotOne"


class NotAMember(SgPatternsError):
    code = "NotAMember"


class NotMinimalGenerator(SgPatternsError):
    code = "NotMinimalGenerator"


class AlreadyFull(SgPatternsError):
    code = "AlreadyFull"


class InvalidSemigroup(SgPatternsError):
    code = "InvalidSemigroup"


# patterns
class PatternSyntaxError(SgPatternsError):
    code = "SyntaxError"


class ZeroCoefficient(SgPatternsError):
    code = "ZeroCoefficient"


class MissingVariable(SgPatternsError):
    code = "MissingVariable"


class NotSorted(SgPatternsError):
    code = "NotSorted"


class LengthMismatch(SgPatternsError):
    code = "LengthMismatch"


class EmptyPattern(SgPatternsError):
    code = "EmptyPattern"


class IndexOutOfRange(SgPatternsError):
    code = "IndexOutOfRange"


class NotBoolean(SgPatternsError):
    code = "NotBoolean"


class DegreeZero(SgPatternsError):
    code = "DegreeZero"


class DegreeInfinite(SgPatternsError):
    code = "DegreeInfinite"


# pattern x semigroup
class NotPremonic(SgPatternsError):
    code = "NotPremonic"


class NotStronglyAdmissible(SgPatternsError):
    code = "NotStronglyAdmissible"


class DoesNotAdmit(SgPatternsError):
    code = "DoesNotAdmit"


class VerificationFailed(SgPatternsError):
    code = "VerificationFailed"


class InvalidParameters(SgPatternsError):
    code = "InvalidParameters"


class NotASemigroup(SgPatternsError):
    code = "NotASemigroup"
