"""Pass/fail results with a witness, shared by all theorem checks."""

from dataclasses import dataclass, field


class PreconditionError(ValueError):
    """Input does not satisfy the hypotheses of a check."""


@dataclass
class Verdict:
    ok: bool
    witness: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.ok)

    @classmethod
    def from_failures(cls, fails, **details):
        return cls(not fails, fails[0] if fails else None, details)


def first_mismatch(lhs, rhs):
    """Smallest key where two dicts of numbers differ, or None."""
    for k in sorted(set(lhs) | set(rhs)):
        if lhs.get(k) != rhs.get(k):
            return {"degree": k, "left": lhs.get(k), "right": rhs.get(k)}
    return None
