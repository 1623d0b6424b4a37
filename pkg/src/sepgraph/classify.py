"""Decision engine for the structure of one-relator separated graph algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Presentation, derive_quantities, normalize
from .monoid import is_stably_finite
from .traces import Infeasible, TraceWeights, solve_trace_feasibility

YES = "Yes"
NO = "No"
NOT_APPLICABLE = "—"
UNKNOWN = "Unknown"
UNKNOWN_OPEN = "Unknown-open"

# citation labels
C_MAIN = "Thm 1.2"
C_PIS = "Thm 4.3"
C_SIMPLE = "Lemma 4.2"
C_CYCLIC = "Cor 4.4"
C_BALANCED = "Prop 5.2"
C_DISJOINT = "Prop 5.3"
C_RFD = "Prop 6.6"
C_MONOID = "Lemma 6.5"
C_FIG2 = "Cor 5.7"
C_FIG1 = "Prop 5.8"


def _easy(case: str) -> str:
    return f"Lemma 5.4{case}"


@dataclass(frozen=True)
class Verdict:
    reduced_purely_infinite_simple: str
    reduced_simple: str
    reduced_faithful_trace: str
    reduced_unique_trace: str
    full_rfd: bool
    full_stably_finite: bool
    monoid_stably_finite: bool
    structural_notes: tuple = ()
    swapped: bool = False
    presentation: Optional[Presentation] = field(default=None, compare=False)
    trace: Optional[TraceWeights] = field(default=None, compare=False)

    def flags(self) -> tuple:
        """Everything except bookkeeping; used for symmetry comparisons."""
        return (self.reduced_purely_infinite_simple, self.reduced_simple,
                self.reduced_faithful_trace, self.reduced_unique_trace,
                self.full_rfd, self.full_stably_finite, self.monoid_stably_finite)

    def to_json(self) -> dict:
        out = {
            "reduced_purely_infinite_simple": self.reduced_purely_infinite_simple,
            "reduced_simple": self.reduced_simple,
            "reduced_faithful_trace": self.reduced_faithful_trace,
            "reduced_unique_trace": self.reduced_unique_trace,
            "full_rfd": self.full_rfd,
            "full_stably_finite": self.full_stably_finite,
            "monoid_stably_finite": self.monoid_stably_finite,
            "structural_notes": [{"statement": s, "citation": c} for s, c in self.structural_notes],
            "swapped": self.swapped,
        }
        if self.presentation is not None:
            out["presentation"] = self.presentation.to_json()
        if self.trace is not None:
            out["trace"] = self.trace.to_json()
        return out


def incomparable(r, s) -> bool:
    """Neither ``r < s`` nor ``s < r`` in the componentwise order (``r = s`` counts as incomparable)."""
    le = all(a <= b for a, b in zip(r, s))
    ge = all(a >= b for a, b in zip(r, s))
    return r == s or (not le and not ge)


def _pattern_22(p: Presentation):
    """Decision table for ``M = N = 2``; returns (simple, unique, note, citation)."""
    r, s, n = p.r, p.s, p.n
    r_doubled = 2 in r
    s_doubled = 2 in s
    supp_r = {i for i in range(n) if r[i]}
    supp_s = {i for i in range(n) if s[i]}
    overlap = len(supp_r & supp_s)
    if r_doubled and s_doubled:
        if supp_r == supp_s:
            return YES, YES, "single generator on both sides; simple with a unique trace", _easy("(2)(e)")
        return (YES, YES, "Morita-equivalent to (M_2, Tr_2) * (M_2, Tr_2); simple with a unique trace",
                _easy("(2)(c)"))
    if r_doubled or s_doubled:
        if overlap:
            return YES, YES, "one side doubled, supports overlap; simple with a unique trace", _easy("(2)(d)")
        return (YES, YES,
                "Morita-equivalent to (M_2, Tr_2) * (C + C, 1/2, 1/2); simple with a unique trace",
                _easy("(2)(b)"))
    if overlap == 2:
        return (YES, UNKNOWN,
                "corner is the reduced group algebra of the lamplighter-type group (*_Z Z_2) x| Z; "
                "simple, trace uniqueness not established", C_FIG2)
    if overlap == 1:
        return (UNKNOWN_OPEN, UNKNOWN,
                "corner embeds in the lamplighter-type group algebra; simplicity is an open problem",
                C_FIG1)
    return NO, UNKNOWN, "Morita-equivalent to C*_r(Z_2 * Z_2); not simple", _easy("(2)(a)")


def classify(p: Presentation) -> Verdict:
    q0, swapped = normalize(p)
    d = derive_quantities(q0)
    M, N = d.M, d.N
    notes = []

    rfd = incomparable(q0.r, q0.s)
    monoid_sf, _ = is_stably_finite(q0)
    if monoid_sf != rfd:
        raise AssertionError("monoid finiteness disagrees with the order criterion")
    notes.append(("full algebra RFD iff stably finite iff r, s incomparable" if rfd
                  else "full algebra is not stably finite since r, s are comparable", C_RFD))
    notes.append(("graph monoid stably finite" if monoid_sf else "graph monoid not stably finite",
                  C_MONOID))

    feasible = solve_trace_feasibility(q0)
    trace = feasible if not isinstance(feasible, Infeasible) else None
    faithful = YES if trace is not None else NO

    if M == 1:
        notes.append(("reduced algebra is M_2(C*(F)), F the ordinary graph obtained by collapsing v "
                      "and the range of the single beta edge", _easy("(1)")))
        if q0.n == 1 and N > 1:
            pis, simple, unique = YES, YES, NO
            notes.append(("one generator with 1 < N: purely infinite simple", C_CYCLIC))
        else:
            pis, simple = NOT_APPLICABLE, NOT_APPLICABLE
            unique = NO if trace is None else UNKNOWN
        if trace is not None:
            notes.append(("faithful trace tau∘Phi from the compatible state on C", C_MAIN))
    elif M < N and d.I1 & d.I2:
        pis, simple, faithful_expected, unique = YES, YES, NO, NO
        notes.append(("2 <= M < N with overlapping supports: purely infinite simple", C_PIS))
        _expect(faithful, faithful_expected)
    elif M < N:
        pis, simple, unique = NO, YES, YES
        _expect(faithful, YES)
        notes.append(("disjoint supports: faithful tracial state", C_DISJOINT))
        notes.append(("M >= 2 and N >= 3: simple", C_SIMPLE))
        notes.append(("N + M >= 5 and finite: unique tracial state", C_MAIN))
    elif M == N == 2:
        _expect(faithful, YES)
        pis = NO
        simple, unique, note, cite = _pattern_22(q0)
        notes.append(("M = N: faithful tracial state", C_BALANCED))
        notes.append((note, cite))
    else:
        _expect(faithful, YES)
        pis, simple, unique = NO, YES, YES
        notes.append(("M = N >= 3: simple with a unique tracial state", C_BALANCED))

    return Verdict(pis, simple, faithful, unique, rfd, rfd, monoid_sf, tuple(notes), swapped,
                   presentation=q0, trace=trace)


def _expect(got, want):
    if got != want:
        raise AssertionError(f"trace solver says {got}, decision tree says {want}")


__all__ = ["Verdict", "classify", "incomparable", "YES", "NO", "UNKNOWN", "UNKNOWN_OPEN",
           "NOT_APPLICABLE"]
