"""Result records shared by the verification routines."""

from dataclasses import dataclass, field

from .arith import scalar_to_str


@dataclass
class Report:
    """Outcome of one exact check; ``passed`` means the residual is exactly zero."""

    name: str
    instance: str
    residual: object
    passed: bool
    meta: dict = field(default_factory=dict)

    def to_json(self):
        out = {"name": self.name, "instance": self.instance, "residual": scalar_to_str(self.residual), "pass": self.passed}
        out.update(self.meta)
        return out
