"""Desk-scale exact ideal engine over the parameter ring Q[C].

Test-support only: a minimal Buchberger normal-form/Groebner routine, ideal
equality, and greedy linear elimination.  The main pipeline never calls into
this module; it exists to certify its output.  Hard scale caps keep it honest
about what it can do.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MathDomainError, ScaleCapError
from .ring import ParamPoly, _cmon_degree, _cmon_mul

DEFAULT_MAX_VARS = 16
DEFAULT_MAX_PAIRS = 50_000


def _collect_vars(gens):
    seen = set()
    for g in gens:
        seen.update(g.variables())
    return sorted(seen)


def make_order(variables, kind="degrevlex", block=()):
    """Key function on C-multi-indices; larger key means larger monomial.

    'degrevlex' treats later variables (in the sorted key order) as larger.
    'lex-block' eliminates the given block: block exponents compare first,
    lexicographically in the listed order, then degrevlex on the rest.
    """
    pos = {v: i for i, v in enumerate(variables)}

    def exps_of(cm):
        out = [0] * len(variables)
        for v, e in cm:
            if v not in pos:
                raise MathDomainError(f"variable C[{v[0]},{v[1]}] outside the order")
            out[pos[v]] = e
        return out

    if kind == "degrevlex":
        def key(cm):
            exps = exps_of(cm)
            return (sum(exps), tuple(-e for e in exps))
        return key
    if kind == "lex-block":
        block = [tuple(v) for v in block]
        rest = [v for v in variables if v not in set(block)]
        rest_pos = {v: i for i, v in enumerate(rest)}

        def key(cm):
            head = [0] * len(block)
            tail = [0] * len(rest)
            for v, e in cm:
                if v in rest_pos:
                    tail[rest_pos[v]] = e
                else:
                    head[block.index(v)] = e
            return (tuple(head), sum(tail), tuple(-e for e in tail))
        return key
    raise MathDomainError(f"unknown term order {kind!r}")


def leading_term(p: ParamPoly, key):
    if not p:
        raise MathDomainError("zero polynomial has no leading term")
    return max(p.terms, key=lambda t: key(t[0]))


def _cmon_divides(a, b):
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def _cmon_div(a, b):
    db = dict(b)
    out = []
    for v, e in a:
        q = e - db.pop(v, 0)
        if q < 0:
            raise MathDomainError("inexact monomial division")
        if q:
            out.append((v, q))
    if any(e > 0 for e in db.values()):
        raise MathDomainError("inexact monomial division")
    return tuple(sorted(out))


def _cmon_lcm(a, b):
    acc = dict(a)
    for v, e in b:
        acc[v] = max(acc.get(v, 0), e)
    return tuple(sorted(acc.items()))


def normal_form(p: ParamPoly, basis, key) -> ParamPoly:
    """Fully reduced remainder of p against the marked leading terms of basis."""
    lts = [(leading_term(b, key), b) for b in basis if b]
    remainder = ParamPoly.zero()
    work = p
    while work:
        cm, c = leading_term(work, key)
        hit = next(((lcm_, lc, b) for (lcm_, lc), b in lts if _cmon_divides(lcm_, cm)), None)
        if hit is None:
            remainder = remainder + ParamPoly([(cm, c)])
            work = work - ParamPoly([(cm, c)])
        else:
            lt_mon, lt_coeff, b = hit
            factor = ParamPoly([(_cmon_div(cm, lt_mon), c / lt_coeff)])
            work = work - factor * b
    return remainder


def _s_polynomial(f, g, key):
    (mf, cf) = leading_term(f, key)
    (mg, cg) = leading_term(g, key)
    l = _cmon_lcm(mf, mg)
    return (ParamPoly([(_cmon_div(l, mf), Fraction(1, 1) / cf)]) * f
            - ParamPoly([(_cmon_div(l, mg), Fraction(1, 1) / cg)]) * g)


def groebner_basis(gens, order="degrevlex", block=(), max_vars=DEFAULT_MAX_VARS,
                   max_pairs=DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis by plain Buchberger with the normal strategy.

    Pairs with coprime leading terms are skipped (Buchberger's first
    criterion); no other shortcuts.  Raises ScaleCapError beyond the caps.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    variables = _collect_vars(gens)
    if len(variables) > max_vars:
        raise ScaleCapError(
            f"{len(variables)} parameters exceed the oracle cap {max_vars}")
    key = make_order(variables, order, block)

    basis = []
    for g in gens:
        nf = normal_form(g, basis, key)
        if nf:
            _, lc = leading_term(nf, key)
            basis.append(nf * (Fraction(1) / lc))

    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    processed = 0
    while pairs:
        processed += 1
        if processed > max_pairs:
            raise ScaleCapError(f"Buchberger exceeded {max_pairs} S-pairs")
        # normal strategy: pick the pair with the lowest lcm degree
        best = min(range(len(pairs)), key=lambda k: _cmon_degree(_cmon_lcm(
            leading_term(basis[pairs[k][0]], key)[0],
            leading_term(basis[pairs[k][1]], key)[0])))
        i, j = pairs.pop(best)
        lt_i = leading_term(basis[i], key)[0]
        lt_j = leading_term(basis[j], key)[0]
        if _cmon_mul(lt_i, lt_j) == _cmon_lcm(lt_i, lt_j):
            continue  # coprime leading terms reduce to zero
        nf = normal_form(_s_polynomial(basis[i], basis[j], key), basis, key)
        if nf:
            _, lc = leading_term(nf, key)
            basis.append(nf * (Fraction(1) / lc))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    # minimalize leading terms, then reduce every tail
    basis.sort(key=lambda b: key(leading_term(b, key)[0]))
    minimal = []
    for b in basis:
        lt_b = leading_term(b, key)[0]
        if not any(_cmon_divides(leading_term(m, key)[0], lt_b) for m in minimal):
            minimal.append(b)
    reduced = []
    for i, b in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        nf = normal_form(b, others, key)
        _, lc = leading_term(nf, key)
        reduced.append(nf * (Fraction(1) / lc))
    return reduced


def ideal_equal(A, B, order="degrevlex", max_vars=DEFAULT_MAX_VARS,
                max_pairs=DEFAULT_MAX_PAIRS) -> bool:
    """Do two generator lists generate the same ideal of Q[C]?"""
    A = [a for a in A if a]
    B = [b for b in B if b]
    if not A or not B:
        return not A and not B
    variables = sorted(set(_collect_vars(A)) | set(_collect_vars(B)))
    if len(variables) > max_vars:
        raise ScaleCapError(
            f"{len(variables)} parameters exceed the oracle cap {max_vars}")
    key = make_order(variables, order)
    gb_a = groebner_basis(A, order, max_vars=max_vars, max_pairs=max_pairs)
    gb_b = groebner_basis(B, order, max_vars=max_vars, max_pairs=max_pairs)
    return (all(not normal_form(a, gb_b, key) for a in A)
            and all(not normal_form(b, gb_a, key) for b in B))


@dataclass(frozen=True)
class EliminationResult:
    """Greedy linear elimination outcome.

    `eliminated` lists (variable, expression) in elimination order; each
    expression may mention variables eliminated later, so evaluation goes in
    reverse order.  `residual` is what remains of the generators.
    """

    residual: tuple
    eliminated: tuple

    @property
    def eliminated_count(self):
        return len(self.eliminated)

    def eliminated_variables(self):
        return [v for v, _ in self.eliminated]

    def lift_point(self, free_values):
        """Extend values of the surviving variables to the eliminated ones."""
        values = dict(free_values)
        for var, expr in reversed(self.eliminated):
            values[var] = expr.evaluate(values)
        return values


def _linear_candidate(g):
    """First variable (in index order) occurring in g only as a constant * var."""
    info = {}
    for cm, c in g.terms:
        for v, e in cm:
            entry = info.setdefault(v, {"count": 0, "clean": True, "coeff": None})
            entry["count"] += 1
            if e == 1 and len(cm) == 1:
                entry["coeff"] = c
            else:
                entry["clean"] = False
    for v in sorted(info):
        entry = info[v]
        if entry["clean"] and entry["count"] == 1 and entry["coeff"]:
            return v, entry["coeff"]
    return None


def greedy_linear_eliminate(gens) -> EliminationResult:
    """Repeatedly solve a variable that appears linearly with constant coefficient.

    Scans generators in listed order and variables in index order, substitutes
    the solved variable everywhere, removes the solving generator, and stops
    when no generator qualifies.  Zero generators are dropped.
    """
    work = [g for g in gens if g]
    eliminated = []
    while True:
        pick = None
        for idx, g in enumerate(work):
            found = _linear_candidate(g)
            if found:
                pick = (idx, *found)
                break
        if pick is None:
            break
        idx, var, coeff = pick
        g = work.pop(idx)
        expr = ParamPoly(
            [(cm, -c / coeff) for cm, c in g.terms if not any(v == var for v, _ in cm)])
        eliminated.append((var, expr))
        work = [w.substitute(var, expr) for w in work]
        work = [w for w in work if w]
    return EliminationResult(residual=tuple(work), eliminated=tuple(eliminated))
