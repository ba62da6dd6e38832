"""Exception types.  Every check that fails carries its least witness."""


class PomError(Exception):
    """Base class for all package errors."""


class InvalidMonoid(PomError):
    pass


class OutOfRangeEntry(InvalidMonoid):
    def __init__(self, i, j, value=None):
        self.witness = (i, j)
        super().__init__(f"table entry ({i},{j}) = {value} out of range")


class IdentityLawViolation(InvalidMonoid):
    def __init__(self, a):
        self.witness = (a,)
        super().__init__(f"identity law fails at a={a}")


class AssociativityViolation(InvalidMonoid):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a+b)+c != a+(b+c) at (a,b,c)=({a},{b},{c})")


class NotAHom(PomError):
    def __init__(self, witness, reason="operation not preserved"):
        self.witness = witness
        super().__init__(f"not a homomorphism: {reason} at {witness}")


class SizeGuardExceeded(PomError):
    def __init__(self, what, size, bound):
        self.witness = (size, bound)
        super().__init__(f"{what}: size {size} exceeds guard {bound}")


class IllFormedCongruence(PomError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"partition is not a congruence, witness {witness}")


class SizeMismatch(PomError):
    def __init__(self, n, m):
        self.witness = (n, m)
        super().__init__(f"size mismatch: {n} vs {m}")


class NotSurjective(PomError):
    def __init__(self, missing):
        self.witness = (missing,)
        super().__init__(f"map is not surjective, {missing} not hit")


class NotAPreorder(PomError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"relation is not reflexive-transitive, witness {witness}")


class IncompatiblePreorder(PomError):
    def __init__(self, witness):
        self.witness = witness
        a, b, c, d = witness
        super().__init__(
            f"preorder not compatible: {a}<={b}, {c}<={d} but not {a}+{c} <= {b}+{d}")


class NotASubmonoid(PomError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not a submonoid, witness {witness}")


class ConeNotRightNormal(PomError):
    def __init__(self, a, element=None):
        self.witness = (a, element)
        super().__init__(f"cone not right normal: {a}+S not contained in S+{a}"
                         + (f" ({element} missing)" if element is not None else ""))


class NotMonotone(PomError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not monotone, witness {witness}")


class NotSchreier(PomError):
    def __init__(self, a, count):
        self.witness = (a, count)
        super().__init__(f"element {a} has {count} decompositions k(x)+s(p(a))")


class InvalidExtension(PomError):
    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"invalid split extension: {reason} {witness if witness is not None else ''}".rstrip())


class InvalidAction(PomError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"action table fails {axiom} at {witness}")


class ActionInvalid(PomError):
    """A preordered action failing one of A1-A4."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"preordered action fails {axiom} at {witness}")


class TypeMismatch(PomError):
    def __init__(self, what):
        super().__init__(f"type mismatch: {what}")


class FormatError(PomError):
    """Base class for text-format errors."""


class FormatSyntaxError(FormatError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownReference(FormatError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}unknown reference {name!r}")


class ValidationError(FormatError):
    def __init__(self, block, cause):
        self.block = block
        self.cause = cause
        self.witness = getattr(cause, "witness", None)
        super().__init__(f"block {block!r}: {cause}")
