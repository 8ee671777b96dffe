from __future__ import annotations

from fcq.exactalg.field import require_odd_prime
from fcq.exactalg.poly import Poly
from fcq.report import VerificationReport


def falling_product(p: int, modulus: int, var: str = "T", hbar: str = "h") -> Poly:
    """prod_{i=0}^{p-1} (T - i*h) in (Z or F_p)[T, h]."""
    vars = (var, hbar)
    T, h = Poly.gens(vars, modulus)
    out = Poly.const(vars, 1, modulus)
    for i in range(p):
        out = out * (T - h.scale(i))
    return out


def falling_factorial_identity(p: int) -> VerificationReport:
    """Check prod_{i<p}(T - i h) == T^p - h^{p-1} T in F_p[T, h]."""
    require_odd_prime(p)
    rep = VerificationReport(f"falling-factorial identity, p={p}")
    vars = ("T", "h")
    T, h = Poly.gens(vars, p)
    lhs = falling_product(p, p)
    rhs = T ** p - h ** (p - 1) * T
    diff = lhs - rhs
    rep.add(f"prod (T - i h) = T^{p} - h^{p-1} T mod {p}", diff.is_zero(), witness=diff)
    spec = lhs.subs({"h": 0}, vars=vars)
    rep.add("h = 0 specialization is T^p", spec == T ** p, witness=spec)
    return rep
