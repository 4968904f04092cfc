"""Commutator-fidelity checks and transcription adjudication for any realization."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..g2core import Gen, all_pairs, bracket

__all__ = ["VerificationReport", "verify_realization", "adjudicate", "structural_discrepancies"]


@dataclass
class VerificationReport:
    residuals: dict = field(default_factory=dict)  # (x, y) -> residual operator

    @property
    def failures(self) -> list:
        return [pair for pair, r in self.residuals.items() if not r.is_zero()]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "pairs": len(self.residuals),
            "zero_residuals": len(self.residuals) - len(self.failures),
            "failures": [f"{x.label},{y.label}" for x, y in self.failures],
            "passed": self.passed,
        }


def verify_realization(ops: dict, bracket_source=bracket) -> VerificationReport:
    """[r(x), r(y)] - r([x, y]) for all 91 unordered pairs."""
    report = VerificationReport()
    for x, y in all_pairs():
        res = ops[x].commutator(ops[y])
        for z, c in bracket_source(x, y).items():
            res = res - c * ops[z]
        report.residuals[(x, y)] = res
    return report


def _failing_generators(report: VerificationReport) -> set:
    out = set()
    for x, y in report.failures:
        out.add(x)
        out.add(y)
    return out


def structural_discrepancies(transcribed: dict, generated: dict) -> list[Gen]:
    return [g for g in Gen if not (transcribed[g] - generated[g]).is_zero()]


def adjudicate(transcribed: dict, generated: dict, name: str = "") -> dict:
    """Every generator where the two maps disagree, and which map passes the verifier.

    For each disagreeing generator we also test the transcription with that one
    operator swapped for the generated one, which isolates the faulty sites.
    """
    t_report = verify_realization(transcribed)
    g_report = verify_realization(generated)
    entries = []
    for g in structural_discrepancies(transcribed, generated):
        entries.append(
            {
                "location": f"{name} {g.label}".strip(),
                "printed_value": str(transcribed[g]),
                "engine_value": str(generated[g]),
                "difference": str(transcribed[g] - generated[g]),
            }
        )
    patched = dict(transcribed)
    for g in structural_discrepancies(transcribed, generated):
        patched[g] = generated[g]
    return {
        "realization": name,
        "discrepancies": entries,
        "transcribed_passes": t_report.passed,
        "transcribed_failing_pairs": len(t_report.failures),
        "generated_passes": g_report.passed,
        "patched_transcription_passes": verify_realization(patched).passed,
        "verifier_passing": "generated" if g_report.passed and not t_report.passed
        else ("both" if g_report.passed else "neither"),
    }
