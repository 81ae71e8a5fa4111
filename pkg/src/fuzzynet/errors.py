"""Exception hierarchy for the knowledge-base engine."""


class KbError(Exception):
    """Base class for every error raised by fuzzynet."""


# model construction
class DegreeOutOfRange(KbError, ValueError):
    pass


class UnknownDomainValue(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EmptyArea(KbError, ValueError):
    pass


class EmptyDomain(KbError, ValueError):
    pass


class DuplicateValue(KbError, ValueError):
    pass


class InconsistentValue(KbError, ValueError):
    """Necessary degree exceeds possible degree for some linguistic value."""


class WrongAreaKind(KbError, ValueError):
    pass


# inclusion degrees
class DomainMismatch(KbError, ValueError):
    pass


class NoPairableVariables(KbError, ValueError):
    pass


class NoPairableAttributes(KbError, ValueError):
    pass


class EmptyNumeratorBase(KbError, ZeroDivisionError):
    pass


# formal contexts
class UnknownObject(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownProperty(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# semantic net
class UnknownParent(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownClass(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownInstance(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownAttribute(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownLabel(KbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleDetected(KbError, ValueError):
    pass


class DuplicateName(KbError, ValueError):
    pass


# file format
class ParseError(KbError, ValueError):
    pass


class ValidationError(KbError, ValueError):
    pass
