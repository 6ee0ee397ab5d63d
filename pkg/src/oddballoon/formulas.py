"""Closed-form quantities: the bounded-matching/degree edge maximum, the
base construction size, and the full Turan value for a good ballooning."""
from __future__ import annotations

from dataclasses import dataclass

from .balloon import AnalysisReport, BalloonSpec, BipartiteTree, analyze
from .graphs import CapacityError, ParameterError


def chvatal_hanson(nu: int, delta: int) -> int:
    """max{e(G) : nu(G) <= nu, Delta(G) <= delta} = nu*delta +
    floor(delta/2) * floor(nu / ceil(delta/2))."""
    if nu < 0 or delta < 0:
        raise ParameterError("chvatal_hanson needs nonnegative arguments")
    if nu == 0 or delta == 0:
        return 0
    return nu * delta + (delta // 2) * (nu // ((delta + 1) // 2))


def abbott_value(k: int) -> int:
    """The nu = delta = k-1 special case in closed piecewise form."""
    if k < 1:
        raise ParameterError("abbott_value needs k >= 1")
    if k % 2 == 1:
        return k * k - k
    return k * k - 3 * k // 2


def e_base(n: int, a: int) -> int:
    """Edges of the base construction: a-1 universal vertices joined to a
    balanced complete bipartite graph on the rest."""
    if a < 1:
        raise ParameterError("e_base needs a >= 1")
    if n < a:
        raise ParameterError(f"e_base needs n >= a (got n={n}, a={a})")
    m = n - a + 1
    return (a - 1) * m + m * m // 4


@dataclass(frozen=True)
class TuranReport:
    """The closed-form value split into its three summands."""

    n: int
    a: int
    k: int
    k1: int
    branch: str
    base: int
    middle: int
    tail: int
    total: int
    large_n_only: bool = True  # the closed form is proved for large n only

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "k": self.k,
            "k1": self.k1,
            "branch": self.branch,
            "base": self.base,
            "middle": self.middle,
            "tail": self.tail,
            "total": self.total,
            "large_n_only": self.large_n_only,
        }

    def render(self) -> str:
        tail_kind = f"({self.k - 1})^2" if self.branch == "k_gt_k1" else f"f({self.k - 1},{self.k - 1})"
        lines = [
            f"n                 = {self.n}",
            f"a, k, k1          = {self.a}, {self.k}, {self.k1}   [branch {self.branch}]",
            f"base  e(G(n,2,a)) = {self.base}",
            f"middle ex(a-1,B)  = {self.middle}",
            f"tail  {tail_kind:<11} = {self.tail}",
            f"total             = {self.total}",
            "note: value proved for sufficiently large n",
        ]
        return "\n".join(lines)


def turan_number(
    n: int,
    tree: BipartiteTree,
    spec: BalloonSpec,
    analysis: AnalysisReport | None = None,
) -> TuranReport:
    """The closed-form Turan value for the good ballooning, with the middle
    term computed exactly by the small-n oracle."""
    from .decomp import b_family
    from .oracle import ex_exact

    rep = analysis if analysis is not None else analyze(tree, spec)
    a, k, k1 = rep.a, rep.k, rep.k1
    if a - 1 > 7:
        raise CapacityError("turan_number computes the middle term exactly only for a-1 <= 7")
    base = e_base(n, a)
    middle = ex_exact(a - 1, b_family(tree, spec)).value
    tail = chvatal_hanson(k - 1, k - 1) if rep.branch == "k_eq_k1" else (k - 1) ** 2
    return TuranReport(
        n=n,
        a=a,
        k=k,
        k1=k1,
        branch=rep.branch,
        base=base,
        middle=middle,
        tail=tail,
        total=base + middle + tail,
    )
