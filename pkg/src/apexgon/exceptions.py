"""Exception types raised across the package.

Every error carries a short machine-readable ``code`` so the command line
front-end can map it into a structured payload.
"""


class ApexgonError(ValueError):
    code = "error"


class TooFewVertices(ApexgonError):
    code = "too_few_vertices"


class NotConvex(ApexgonError):
    code = "not_convex"


class DuplicateVertex(ApexgonError):
    code = "duplicate_vertex"


class DegenerateSegment(ApexgonError):
    code = "degenerate_segment"


class DegenerateApex(ApexgonError):
    code = "degenerate_apex"


class DegenerateInput(ApexgonError):
    code = "degenerate_input"


class InvalidSubset(ApexgonError):
    code = "invalid_subset"


class PreconditionViolated(ApexgonError):
    code = "precondition_violated"


class SizeLimit(ApexgonError):
    code = "size_limit"


class ZeroError(ApexgonError):
    code = "zero_error"


class Degenerate(ApexgonError):
    code = "degenerate"


class HypothesisNotEstablished(UserWarning):
    """Structural audit run outside the worst-approximable regime."""
