"""Finite Krasner (m,n)-hyperrings stored as dense operation tables.

A structure is a finite carrier together with an m-ary hyperoperation f
(set-valued, the "addition") and an n-ary single-valued operation g (the
"multiplication"), a zero that is the scalar neutral of f and absorbing
for g, and a scalar identity for g.  Everything here works on explicit
tables; carriers are tiny, so validators simply enumerate.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class ArityError(ValueError):
    """Argument list length incompatible with a table's arity."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: str
    expected: str
    found: str

    def render(self) -> str:
        return (f"axiom={self.axiom} witness={self.witness} "
                f"expected={self.expected} found={self.found}")


@dataclass
class ValidationReport:
    passed: bool
    violations: list

    def render(self, name: str = "") -> str:
        lines = []
        if name:
            lines.append(f"structure: {name}")
        lines.append("status: " + ("PASSED" if self.passed else "FAILED"))
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(v.render() for v in self.violations)
        return "\n".join(lines) + "\n"


class HyperringTable:
    """Immutable dense-table representation of a finite Krasner (m,n)-hyperring.

    f maps every ordered m-tuple of element indices to a frozenset of
    indices; g maps every ordered n-tuple to a single index.  Tables are
    total.  Instances are treated as immutable after construction and are
    hashed by identity, which lets expensive derived data (ideal lattices,
    radicals) be memoised on the instance.
    """

    def __init__(self, name, m, n, labels, zero, one, f, g,
                 commutative_f=True, commutative_g=True):
        if m < 2 or n < 2:
            raise ValueError("arities m and n must be at least 2")
        self.name = name
        self.m = m
        self.n = n
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate element labels")
        self.size = len(self.labels)
        self.zero = zero
        self.one = one
        self.f = dict(f)
        self.g = dict(g)
        self.commutative_f = commutative_f
        self.commutative_g = commutative_g
        self.validation = None        # ValidationReport, attached by callers
        self.validation_waived = False
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._inverses = None
        self._check_total()

    def _check_total(self):
        rng = range(self.size)
        for t in itertools.product(rng, repeat=self.m):
            if t not in self.f:
                raise ValueError(f"f table not total: missing {self.tuple_label(t)}")
            value = self.f[t] = frozenset(self.f[t])
            if not all(isinstance(x, int) and 0 <= x < self.size for x in value):
                raise ValueError(f"f value out of carrier at {self.tuple_label(t)}")
        for t in itertools.product(rng, repeat=self.n):
            if t not in self.g:
                raise ValueError(f"g table not total: missing {self.tuple_label(t)}")
            v = self.g[t]
            if not isinstance(v, int) or not 0 <= v < self.size:
                raise ValueError(f"g value out of carrier at {self.tuple_label(t)}")

    # -- label helpers ----------------------------------------------------

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown element label {label!r} in {self.name}") from None

    def label(self, i):
        return self.labels[i]

    def tuple_label(self, t):
        return ",".join(self.labels[i] for i in t)

    def subset_label(self, members):
        return "{" + ",".join(self.labels[i] for i in sorted(members)) + "}"

    @property
    def carrier(self):
        return range(self.size)

    @property
    def full_set(self):
        return frozenset(range(self.size))

    def inverses(self, x):
        """All y with 0 in f(x, y, 0^(m-2)); a singleton on valid tables."""
        if self._inverses is None:
            pad = (self.zero,) * (self.m - 2)
            inv = []
            for a in range(self.size):
                inv.append(frozenset(
                    b for b in range(self.size) if self.zero in self.f[(a, b) + pad]))
            self._inverses = inv
        return self._inverses[x]

    def __repr__(self):
        return f"HyperringTable({self.name!r}, m={self.m}, n={self.n}, size={self.size})"


# -- operations -----------------------------------------------------------

def f_extend(ring, subsets):
    """Union of f over all choice tuples drawn from the given subsets."""
    if len(subsets) != ring.m:
        raise ArityError(f"f_extend needs {ring.m} subsets, got {len(subsets)}")
    for s in subsets:
        if not s:
            raise ValueError("f_extend: empty input subset")
    out = set()
    f = ring.f
    for t in itertools.product(*subsets):
        out |= f[t]
    return frozenset(out)


def g_eval(ring, args):
    if len(args) != ring.n:
        raise ArityError(f"g takes {ring.n} arguments, got {len(args)}")
    return ring.g[tuple(args)]


def g_iterated(ring, args):
    """Left-nested fold of g over l(n-1)+1 arguments; l=1 is plain g."""
    n = ring.n
    k = len(args)
    if k < n or (k - 1) % (n - 1) != 0:
        raise ArityError(f"g_iterated needs l(n-1)+1 arguments for n={n}, got {k}")
    g = ring.g
    acc = g[tuple(args[:n])]
    pos = n
    while pos < k:
        acc = g[(acc,) + tuple(args[pos:pos + n - 1])]
        pos += n - 1
    return acc


def g_power(ring, a, s):
    """s-th g-power of a, identity-padded to a representable arity.

    For s <= n this is g(a^(s), 1^(n-s)); for larger s the argument list
    a^(s) is padded with the scalar identity up to the next length of the
    form l(n-1)+1, which is value-neutral under the identity axiom.
    """
    if s < 1:
        raise ValueError("power count must be >= 1")
    n = ring.n
    if s <= n:
        return g_eval(ring, (a,) * s + (ring.one,) * (n - s))
    rem = (s - 1) % (n - 1)
    pad = 0 if rem == 0 else (n - 1) - rem
    return g_iterated(ring, (a,) * s + (ring.one,) * pad)


def g_product(ring, elems):
    """g-product of an arbitrary non-empty argument list, identity-padded."""
    elems = tuple(elems)
    if not elems:
        raise ValueError("empty product")
    n = ring.n
    if len(elems) < n:
        return g_eval(ring, elems + (ring.one,) * (n - len(elems)))
    rem = (len(elems) - 1) % (n - 1)
    pad = 0 if rem == 0 else (n - 1) - rem
    return g_iterated(ring, elems + (ring.one,) * pad)


# -- validators -----------------------------------------------------------

def _check_f_entries(ring, out):
    ok = True
    for t in itertools.product(range(ring.size), repeat=ring.m):
        if not ring.f[t]:
            out.append(Violation("f-output-nonempty", f"f({ring.tuple_label(t)})",
                                 "non-empty subset", "{}"))
            ok = False
    return ok


def _check_commutative(ring, table, arity, axiom, render, out):
    for t in itertools.product(range(ring.size), repeat=arity):
        st = tuple(sorted(t))
        if st != t and table[t] != table[st]:
            out.append(Violation(
                axiom, f"({ring.tuple_label(t)}) vs ({ring.tuple_label(st)})",
                render(table[st]), render(table[t])))


def _check_f_associativity(ring, out):
    # compare every nesting position against the leftmost one, over all
    # (2m-1)-tuples; O(|R|^(2m-1)) per position pair, fine at desk scale
    m = ring.m
    f = ring.f
    rng = range(ring.size)

    def nested(args, cut):
        inner = f[args[cut:cut + m]]
        outer = set()
        for t in inner:
            outer |= f[args[:cut] + (t,) + args[cut + m:]]
        return frozenset(outer)

    for args in itertools.product(rng, repeat=2 * m - 1):
        base = nested(args, 0)
        for cut in range(1, m):
            other = nested(args, cut)
            if other != base:
                out.append(Violation(
                    "f-associativity",
                    f"args=({ring.tuple_label(args)}) nest 0 vs nest {cut}",
                    ring.subset_label(base), ring.subset_label(other)))


def _check_zero_neutral(ring, out):
    z = ring.zero
    for x in range(ring.size):
        for i in range(ring.m):
            t = (z,) * i + (x,) + (z,) * (ring.m - 1 - i)
            if ring.f[t] != frozenset({x}):
                out.append(Violation(
                    "zero-scalar-neutral", f"f({ring.tuple_label(t)})",
                    "{" + ring.label(x) + "}", ring.subset_label(ring.f[t])))


def _check_inverses(ring, out):
    ok = True
    for x in range(ring.size):
        inv = ring.inverses(x)
        if len(inv) != 1:
            ok = False
            out.append(Violation(
                "inverse-uniqueness", f"x={ring.label(x)}",
                "exactly one inverse", ring.subset_label(inv)))
    return ok


def _check_reversibility(ring, out):
    m = ring.m
    f = ring.f
    inv = [min(ring.inverses(x)) for x in range(ring.size)]
    for args in itertools.product(range(ring.size), repeat=m):
        for x in f[args]:
            for i in range(m):
                rest = tuple(inv[args[j]] for j in range(m) if j != i)
                if args[i] not in f[(x,) + rest]:
                    out.append(Violation(
                        "reversibility",
                        f"{ring.label(x)} in f({ring.tuple_label(args)}), i={i + 1}",
                        f"{ring.label(args[i])} in f({ring.tuple_label((x,) + rest)})",
                        ring.subset_label(f[(x,) + rest])))


def validate_canonical_hypergroup(ring):
    """Check that (R, f) is a canonical m-ary hypergroup.

    Axioms: commutativity, m-ary associativity of the extended operation,
    zero as scalar neutral, unique additive inverses, reversibility.
    Failures are reported, never raised.
    """
    out = []
    entries_ok = _check_f_entries(ring, out)
    _check_commutative(ring, ring.f, ring.m, "f-commutativity", ring.subset_label, out)
    if entries_ok:
        _check_f_associativity(ring, out)
    _check_zero_neutral(ring, out)
    inverses_ok = _check_inverses(ring, out)
    if entries_ok and inverses_ok:
        _check_reversibility(ring, out)
    return ValidationReport(not out, out)


def _check_g_associativity(ring, out):
    n = ring.n
    g = ring.g
    for args in itertools.product(range(ring.size), repeat=2 * n - 1):
        base = g[(g[args[:n]],) + args[n:]]
        for cut in range(1, n):
            other = g[args[:cut] + (g[args[cut:cut + n]],) + args[cut + n:]]
            if other != base:
                out.append(Violation(
                    "g-associativity",
                    f"args=({ring.tuple_label(args)}) nest 0 vs nest {cut}",
                    ring.label(base), ring.label(other)))


def _check_distributivity(ring, out):
    m, n = ring.m, ring.n
    f, g = ring.f, ring.g
    rng = range(ring.size)
    for i in range(n):
        for amb in itertools.product(rng, repeat=n - 1):
            for xs in itertools.product(rng, repeat=m):
                left = frozenset(g[amb[:i] + (t,) + amb[i:]] for t in f[xs])
                right = f[tuple(g[amb[:i] + (x,) + amb[i:]] for x in xs)]
                if left != right:
                    out.append(Violation(
                        "distributivity",
                        f"g(pos {i + 1}; ambient={ring.tuple_label(amb)}; "
                        f"f({ring.tuple_label(xs)}))",
                        ring.subset_label(right), ring.subset_label(left)))


def _check_zero_absorbing(ring, out):
    n = ring.n
    z = ring.zero
    for i in range(n):
        for amb in itertools.product(range(ring.size), repeat=n - 1):
            t = amb[:i] + (z,) + amb[i:]
            if ring.g[t] != z:
                out.append(Violation(
                    "zero-absorbing", f"g({ring.tuple_label(t)})",
                    ring.label(z), ring.label(ring.g[t])))


def _check_scalar_identity(ring, out):
    n = ring.n
    e = ring.one
    for x in range(ring.size):
        for i in range(n):
            t = (e,) * i + (x,) + (e,) * (n - 1 - i)
            if ring.g[t] != x:
                out.append(Violation(
                    "scalar-identity", f"g({ring.tuple_label(t)})",
                    ring.label(x), ring.label(ring.g[t])))


def validate_krasner(ring):
    """Full axiom check: canonical hypergroup, n-ary semigroup with
    commutative g, distributivity, absorbing zero, scalar identity."""
    report = validate_canonical_hypergroup(ring)
    out = report.violations
    _check_commutative(ring, ring.g, ring.n, "g-commutativity", ring.label, out)
    _check_g_associativity(ring, out)
    _check_distributivity(ring, out)
    _check_zero_absorbing(ring, out)
    _check_scalar_identity(ring, out)
    return ValidationReport(not out, out)
