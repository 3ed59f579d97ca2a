"""Exception hierarchy.

Three kinds of failure are kept apart so callers (and the CLI exit codes)
can tell them apart:

* ``InvalidInput``  -- malformed data: bad files, non-associative tables,
  broken representations.
* ``HypothesesNotMet`` -- well-formed input for which the theory does not
  apply (not split semisimple, not normal, too many blocks, ...).
* ``TheoremCheckFailed`` -- a proved statement failed to verify.  This is
  always a defect in the library, never a property of the input.
"""

from __future__ import annotations


class CliffordError(Exception):
    exit_code = 1


class InvalidInput(CliffordError, ValueError):
    exit_code = 2


class HypothesesNotMet(CliffordError):
    exit_code = 3


class NotSplit(HypothesesNotMet):
    """The prime field is not a splitting field for the input."""


class CenterNotSeparable(HypothesesNotMet):
    """A central element has a repeated root: the center is not reduced."""


class SplittingFailed(HypothesesNotMet):
    """Randomized idempotent splitting ran out of retries."""


class NotCertifiedSemisimple(HypothesesNotMet):
    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        msg = f"not certified semisimple (stage: {stage})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NoCertificate(HypothesesNotMet):
    pass


class NotAbsolutelySimple(HypothesesNotMet):
    pass


class TooManyBlocks(HypothesesNotMet):
    pass


class WitnessNotFound(HypothesesNotMet):
    pass


class TheoremCheckFailed(CliffordError):
    exit_code = 4

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        msg = f"theorem check failed: {clause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
