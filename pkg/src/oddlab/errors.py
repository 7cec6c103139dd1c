"""Exception hierarchy shared by all oddlab modules."""


class OddlabError(Exception):
    """Base class for evaluation errors raised by oddlab."""


class DomainError(OddlabError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Argument sits on a singular point (e.g. log base 1)."""


class PoleError(DomainError):
    """Argument is a pole of the gamma function."""


class ResourceError(OddlabError):
    """Request exceeds a configured resource guard."""


class CertificateError(OddlabError):
    """A coefficient violated its declared geometric decay bound."""
