"""Polynomial module realizations: induced modules C[y] (x) W and
C[x] (x) W, the basic spin module, divided differences, and the Dunkl
operator actions of x_i, y_i and xi_i.

All divided differences are evaluated by exact telescoping sums; no
polynomial division is performed anywhere.
"""

from __future__ import annotations

from functools import lru_cache

from . import algebras as alg
from . import structure as st
from .engine import AlgebraError, generator_element, monomial_element
from .reports import Report
from .scalars import ONE, Scalar

__all__ = [
    "FiniteModule",
    "basic_spin",
    "regular_spin",
    "InducedVector",
    "divided_difference",
    "dunkl_x",
    "dunkl_y",
    "dunkl_xi",
    "act_token",
    "act_word",
    "verify_module",
    "engine_action",
    "engine_action_x",
    "oracle_equivalence",
    "oracle_equivalence_x",
]

_MINUS = Scalar.from_rational(-1)


class FiniteModule:
    """A module over C_n x| CS_n (``spin=False``) or CS_n^- (``spin=True``),
    given by generator actions on an indexed basis."""

    def __init__(self, name: str, n: int, spin: bool, basis: tuple, gen_action):
        self.name = name
        self.n = n
        self.spin = spin
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}
        self._gen_action = gen_action
        self._cache: dict = {}

    def dim(self) -> int:
        return len(self.basis)

    def act_gen(self, token, idx: int):
        key = (token, idx)
        out = self._cache.get(key)
        if out is None:
            out = self._gen_action(self, token, idx)
            self._cache[key] = out
        return out

    def act_perm(self, perm: tuple, idx: int):
        letter = "t" if self.spin else "s"
        terms = [(ONE, idx)]
        for m in reversed(st.lehmer_word(perm)):
            terms = self._apply(( letter, m), terms)
        return terms

    def _apply(self, token, terms):
        out = []
        for c, idx in terms:
            for c2, idx2 in self.act_gen(token, idx):
                out.append((c * c2, idx2))
        return _merge(out)

    def act_tokens(self, tokens, idx: int):
        terms = [(ONE, idx)]
        for token in reversed(tokens):
            if token[0] in ("sij", "oddtr", "perm"):
                raise AlgebraError(f"composite token {token!r} must be expanded first")
            terms = self._apply(token, terms)
        return terms

    def label(self, idx: int) -> str:
        b = self.basis[idx]
        if self.spin:
            word = st.lehmer_word(b)
            return "*".join(f"t{m}" for m in word) if word else "1"
        return "*".join(f"c{i}" for i, bit in enumerate(b, start=1) if bit) or "1"


def _merge(terms):
    acc: dict = {}
    for c, idx in terms:
        prev = acc.get(idx)
        val = c if prev is None else prev + c
        if val:
            acc[idx] = val
        elif idx in acc:
            del acc[idx]
    return [(c, i) for i, c in acc.items()]


def _basic_spin_action(mod: FiniteModule, token, idx: int):
    bits = mod.basis[idx]
    kind, i = token
    if kind == "c":
        unit = tuple(1 if m == i else 0 for m in range(1, mod.n + 1))
        sgn, out = st.cliff_mul(unit, bits)
        return [(ONE if sgn > 0 else _MINUS, mod.index[out])]
    if kind == "s":
        sgn, out = st.cliff_conj(st.transposition(i, i + 1, mod.n), bits)
        return [(ONE if sgn > 0 else _MINUS, mod.index[out])]
    raise AlgebraError(f"basic spin module has no action for {token!r}")


def _regular_spin_action(mod: FiniteModule, token, idx: int):
    kind, i = token
    if kind != "t":
        raise AlgebraError(f"regular spin module has no action for {token!r}")
    w = mod.basis[idx]
    sg = st.spin_group(mod.n)
    s_i = st.transposition(i, i + 1, mod.n)
    sgn = sg.beta(s_i, w)
    return [(ONE if sgn > 0 else _MINUS, mod.index[st.compose(s_i, w)])]


@lru_cache(maxsize=None)
def basic_spin(n: int) -> FiniteModule:
    """L_n = C(c_1..c_n): Clifford left multiplication, S_n permutes indices."""
    basis = []
    for mask in range(1 << n):
        basis.append(tuple((mask >> b) & 1 for b in range(n)))
    return FiniteModule("basic-spin", n, False, tuple(sorted(basis)), _basic_spin_action)


@lru_cache(maxsize=None)
def regular_spin(n: int) -> FiniteModule:
    """The left regular module of CS_n^- on the basis {t_w}."""
    basis = tuple(sorted(st.all_perms(n)))
    return FiniteModule("regular-spin", n, True, basis, _regular_spin_action)


class InducedVector:
    """A vector in C[vars] (x) W: finite map (exponents, basis index) -> Scalar.
    ``side`` records whether the polynomial variables are the y's or x's."""

    __slots__ = ("module", "side", "terms")

    def __init__(self, module: FiniteModule, side: str, terms: dict | None = None):
        self.module = module
        self.side = side
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def vacuum(cls, module: FiniteModule, side: str = "y", idx: int = 0):
        return cls(module, side, {(tuple([0] * module.n), idx): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            prev = out.get(k)
            val = v if prev is None else prev + v
            if val:
                out[k] = val
            elif k in out:
                del out[k]
        return InducedVector(self.module, self.side, out)

    def __sub__(self, other):
        return self + other.scale(_MINUS)

    def scale(self, c: Scalar):
        return InducedVector(self.module, self.side, {k: c * v for k, v in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, InducedVector)
            and self.module is other.module
            and self.side == other.side
            and self.terms == other.terms
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        var = self.side
        pieces = []
        for (exps, idx), coeff in sorted(self.terms.items(), key=lambda t: t[0]):
            poly = "*".join(
                (f"{var}{i}" if e == 1 else f"{var}{i}^{e}")
                for i, e in enumerate(exps, start=1)
                if e
            ) or "1"
            cs = coeff.render(atom=True)
            body = f"{poly} ⊗ {self.module.label(idx)}"
            pieces.append(body if cs == "1" else f"-{body}" if cs == "-1" else f"{cs}*{body}")
        out = pieces[0]
        for body in pieces[1:]:
            out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return out

    def __repr__(self):
        return f"<induced {self.render()}>"


def _tele(p: int, q: int):
    """(v_i^p v_k^q - v_i^q v_k^p)/(v_i - v_k) as [(sign, (e_i, e_k))]."""
    if p == q:
        return []
    if p > q:
        return [(1, (q + m, p - 1 - m)) for m in range(p - q)]
    return [(-1, (p + m, q - 1 - m)) for m in range(q - p)]


def divided_difference(poly: dict, i: int, k: int) -> dict:
    """(1 - s_{ki})(f) / (v_i - v_k), computed monomial-wise by telescoping.

    ``poly`` maps exponent tuples to scalars; the quotient is always exact
    because the numerator vanishes on v_i = v_k.
    """
    if i == k:
        raise AlgebraError("divided difference needs distinct indices")
    out: dict = {}
    for exps, coeff in poly.items():
        p, q = exps[i - 1], exps[k - 1]
        for sgn, (ei, ek) in _tele(p, q):
            new = list(exps)
            new[i - 1], new[k - 1] = ei, ek
            key = tuple(new)
            val = coeff if sgn > 0 else -coeff
            prev = out.get(key)
            val = val if prev is None else prev + val
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _add_term(acc: dict, key, val: Scalar) -> None:
    prev = acc.get(key)
    val = val if prev is None else prev + val
    if val:
        acc[key] = val
    elif key in acc:
        del acc[key]


def dunkl_x(i: int, v: InducedVector, u: Scalar | None = None) -> InducedVector:
    """x_i o (f (x) w) = u sum_{k != i} ((1 - s_{ki})f)/(y_i - y_k) (x)
    (1 - c_i c_k) s_{ki}(w)."""
    mod = v.module
    if mod.spin or v.side != "y":
        raise AlgebraError("dunkl_x acts on C[y] (x) W for a Clifford-Weyl module W")
    u = Scalar.u_power(1) if u is None else u
    n = mod.n
    out: dict = {}
    for (exps, w), coeff in v.terms.items():
        for k in range(1, n + 1):
            if k == i:
                continue
            p, q = exps[i - 1], exps[k - 1]
            if p == q:
                continue
            swapped = mod.act_perm(st.transposition(k, i, n), w)
            acted = list(swapped)
            for c2, w2 in swapped:
                for c3, w3 in mod.act_gen(("c", k), w2):
                    for c4, w4 in mod.act_gen(("c", i), w3):
                        acted.append((-(c2 * c3 * c4), w4))
            for sgn, (ei, ek) in _tele(p, q):
                new = list(exps)
                new[i - 1], new[k - 1] = ei, ek
                base = u * coeff if sgn > 0 else -(u * coeff)
                for c2, w2 in acted:
                    _add_term(out, (tuple(new), w2), base * c2)
    return InducedVector(mod, "y", out)


def dunkl_xi(i: int, v: InducedVector, u: Scalar | None = None) -> InducedVector:
    """xi_i o (f (x) w) = u sum_{k != i} ((1 - s_{ki})f)/(y_i - y_k) (x) [k,i](w)."""
    mod = v.module
    if not mod.spin or v.side != "y":
        raise AlgebraError("dunkl_xi acts on C[y] (x) W for a spin group module W")
    u = Scalar.u_power(1) if u is None else u
    n = mod.n
    sg = st.spin_group(n)
    out: dict = {}
    for (exps, w), coeff in v.terms.items():
        for k in range(1, n + 1):
            if k == i:
                continue
            p, q = exps[i - 1], exps[k - 1]
            if p == q:
                continue
            otsgn, perm = sg.odd_transposition(k, i)
            acted = mod.act_perm(perm, w)
            if otsgn < 0:
                acted = [(-c, w2) for c, w2 in acted]
            for sgn, (ei, ek) in _tele(p, q):
                new = list(exps)
                new[i - 1], new[k - 1] = ei, ek
                base = u * coeff if sgn > 0 else -(u * coeff)
                for c2, w2 in acted:
                    _add_term(out, (tuple(new), w2), base * c2)
    return InducedVector(mod, "y", out)


def dunkl_y(i: int, v: InducedVector, u: Scalar | None = None) -> InducedVector:
    """y_i o (f (x) w) on C[x] (x) W: the two-part divided difference of the
    y-side Dunkl operator, with the signed telescoping for the x_k + x_i
    denominator and the Clifford pair acting on W."""
    mod = v.module
    if mod.spin or v.side != "x":
        raise AlgebraError("dunkl_y acts on C[x] (x) W for a Clifford-Weyl module W")
    u = Scalar.u_power(1) if u is None else u
    n = mod.n
    out: dict = {}
    for (exps, w), coeff in v.terms.items():
        for k in range(1, n + 1):
            if k == i:
                continue
            p, q = exps[i - 1], exps[k - 1]
            swapped = mod.act_perm(st.transposition(k, i, n), w)
            # (f - s_{ki} f)/(x_k - x_i) (x) s_{ki}(w)
            for sgn, (ei, ek) in _tele(p, q):
                new = list(exps)
                new[i - 1], new[k - 1] = ei, ek
                base = u * coeff if sgn < 0 else -(u * coeff)
                for c2, w2 in swapped:
                    _add_term(out, (tuple(new), w2), base * c2)
            # (f - nu_{ik} s_{ki} f)/(x_k + x_i) (x) c_i c_k s_{ki}(w)
            acted = []
            for c2, w2 in swapped:
                for c3, w3 in mod.act_gen(("c", k), w2):
                    for c4, w4 in mod.act_gen(("c", i), w3):
                        acted.append((c2 * c3 * c4, w4))
            for sgn, (ei, ek) in _tele(p, q):
                flip = sgn if (p + ei) & 1 else -sgn
                new = list(exps)
                new[i - 1], new[k - 1] = ei, ek
                base = u * coeff if flip > 0 else -(u * coeff)
                for c2, w2 in acted:
                    _add_term(out, (tuple(new), w2), base * c2)
    return InducedVector(mod, "x", out)


def _permute_exps(perm: tuple, exps: tuple) -> tuple:
    out = [0] * len(exps)
    for i, e in enumerate(exps, start=1):
        out[st.apply_perm(perm, i) - 1] = e
    return tuple(out)


def act_token(token, v: InducedVector, u: Scalar | None = None) -> InducedVector:
    """Action of one generator token on an induced vector."""
    mod = v.module
    n = mod.n
    kind = token[0]
    if kind in ("sij", "oddtr", "perm"):
        if kind == "perm":
            sgn, perm = 1, token[1]
        elif kind == "sij":
            sgn, perm = 1, st.transposition(token[1], token[2], n)
        else:
            sgn, perm = st.spin_group(n).odd_transposition(token[1], token[2])
        out: dict = {}
        for (exps, w), coeff in v.terms.items():
            for c2, w2 in mod.act_perm(perm, w):
                val = coeff * c2
                _add_term(out, (_permute_exps(perm, exps), w2), val if sgn > 0 else -val)
        return InducedVector(mod, v.side, out)
    if kind in ("s", "t"):
        m = token[1]
        perm = st.transposition(m, m + 1, n)
        out = {}
        for (exps, w), coeff in v.terms.items():
            for c2, w2 in mod.act_gen(token, w):
                _add_term(out, (_permute_exps(perm, exps), w2), coeff * c2)
        return InducedVector(mod, v.side, out)
    if kind == "c":
        i = token[1]
        out = {}
        for (exps, w), coeff in v.terms.items():
            twist = v.side == "x" and exps[i - 1] & 1
            for c2, w2 in mod.act_gen(token, w):
                val = coeff * c2
                _add_term(out, (exps, w2), -val if twist else val)
        return InducedVector(mod, v.side, out)
    if kind in ("y", "xi", "x"):
        i = token[1]
        if kind == v.side:
            out = {}
            for (exps, w), coeff in v.terms.items():
                new = list(exps)
                new[i - 1] += 1
                _add_term(out, (tuple(new), w), coeff)
            return InducedVector(mod, v.side, out)
        if kind == "x":
            return dunkl_x(i, v, u)
        if kind == "xi":
            return dunkl_xi(i, v, u)
        return dunkl_y(i, v, u)
    raise AlgebraError(f"no module action for token {token!r}")


def act_word(tokens, v: InducedVector, u: Scalar | None = None) -> InducedVector:
    for token in reversed(tokens):
        v = act_token(token, v, u)
    return v


def _module_sig(family: str, n: int):
    return alg.dahca(n) if family == "dahca" else alg.sdaha(n)


def _poly_monomials(n: int, degree_bound: int):
    if n == 0:
        yield ()
        return
    for rest in _poly_monomials(n - 1, degree_bound):
        used = sum(rest)
        for e in range(degree_bound - used + 1):
            yield (e,) + rest


def verify_module(family: str, W: FiniteModule, degree_bound: int = 4) -> Report:
    """Every defining relation, applied as an operator identity to every
    induced basis vector of bounded degree, must evaluate to zero."""
    sig = _module_sig(family, W.n)
    u = sig.u_scalar
    report = Report(f"module[{sig.name}, {W.name}, deg<={degree_bound}]")
    vectors = [
        (exps, idx)
        for exps in _poly_monomials(W.n, degree_bound)
        for idx in range(W.dim())
    ]
    for rel_id, lhs, rhs in sig.relations():
        residual_ok = True
        witness = None
        for exps, idx in vectors:
            base = InducedVector(W, "y", {(exps, idx): ONE})
            got = InducedVector(W, "y")
            for coeff, word in lhs:
                got = got + act_word(word, base, u).scale(coeff)
            for coeff, word in rhs:
                got = got - act_word(word, base, u).scale(coeff)
            if not got.is_zero:
                residual_ok = False
                witness = f"on y^{exps} (x) {W.label(idx)}: {got.render()}"
                break
        report.add(rel_id, residual_ok, witness)
    return report


def engine_action(token, exps: tuple, W: FiniteModule, idx: int) -> InducedVector:
    """Oracle: act through the rewriting engine, normalizing generator * y^exps
    in the y-first PBW order and reading the slots off against 1 (x) w."""
    n = W.n
    sig = alg.sdaha_yfirst(n) if W.spin else alg.dahca_yfirst(n)
    mono = (exps, st.identity(n), sig._zeros if sig.has_clifford else (), tuple([0] * n))
    prod = generator_element(sig, token) * monomial_element(sig, mono)
    out: dict = {}
    for (left, grp, cliff, right), coeff in prod.terms.items():
        if any(right):
            continue  # the right slot acts trivially on 1 (x) w
        terms = [(ONE, idx)]
        if cliff:
            for i in range(n, 0, -1):
                if cliff[i - 1]:
                    terms = W._apply(("c", i), terms)
        if grp != st.identity(n):
            merged = []
            for c2, w2 in terms:
                for c3, w3 in W.act_perm(grp, w2):
                    merged.append((c2 * c3, w3))
            terms = merged
        for c2, w2 in terms:
            _add_term(out, (left, w2), coeff * c2)
    return InducedVector(W, "y", out)


def engine_action_x(token, exps: tuple, W: FiniteModule, idx: int) -> InducedVector:
    """Oracle for the C[x] (x) W module: normalize generator * x^exps in the
    standard PBW order and drop the terms with a surviving y slot."""
    n = W.n
    sig = alg.dahca(n)
    mono = (exps, st.identity(n), sig._zeros, tuple([0] * n))
    prod = generator_element(sig, token) * monomial_element(sig, mono)
    out: dict = {}
    for (left, grp, cliff, right), coeff in prod.terms.items():
        if any(right):
            continue
        terms = [(ONE, idx)]
        for i in range(n, 0, -1):
            if cliff[i - 1]:
                terms = W._apply(("c", i), terms)
        if grp != st.identity(n):
            merged = []
            for c2, w2 in terms:
                for c3, w3 in W.act_perm(grp, w2):
                    merged.append((c2 * c3, w3))
            terms = merged
        for c2, w2 in terms:
            _add_term(out, (left, w2), coeff * c2)
    return InducedVector(W, "x", out)


def oracle_equivalence_x(W: FiniteModule, degree_bound: int = 4) -> Report:
    """dunkl_y (and the other generators on C[x] (x) W) against the engine."""
    sig = alg.dahca(W.n)
    u = sig.u_scalar
    report = Report(f"oracle-x[{sig.name}, {W.name}, deg<={degree_bound}]")
    for token in sig.generator_tokens():
        ok = True
        witness = None
        for exps in _poly_monomials(W.n, degree_bound):
            for idx in range(W.dim()):
                direct = act_token(token, InducedVector(W, "x", {(exps, idx): ONE}), u)
                via_engine = engine_action_x(token, exps, W, idx)
                if direct != via_engine:
                    ok = False
                    witness = (
                        f"x^{exps} (x) {W.label(idx)}: dunkl={direct.render()} "
                        f"engine={via_engine.render()}"
                    )
                    break
            if not ok:
                break
        report.add(f"oracle-x[{token[0]}{token[1]}]", ok, witness)
    return report


def oracle_equivalence(family: str, W: FiniteModule, degree_bound: int = 4) -> Report:
    """Dunkl action == induced-module action computed by engine rewriting."""
    sig = _module_sig(family, W.n)
    u = sig.u_scalar
    report = Report(f"oracle[{sig.name}, {W.name}, deg<={degree_bound}]")
    for token in sig.generator_tokens():
        ok = True
        witness = None
        for exps in _poly_monomials(W.n, degree_bound):
            for idx in range(W.dim()):
                direct = act_token(token, InducedVector(W, "y", {(exps, idx): ONE}), u)
                via_engine = engine_action(token, exps, W, idx)
                if direct != via_engine:
                    ok = False
                    witness = (
                        f"y^{exps} (x) {W.label(idx)}: dunkl={direct.render()} "
                        f"engine={via_engine.render()}"
                    )
                    break
            if not ok:
                break
        report.add(f"oracle[{token[0]}{token[1]}]", ok, witness)
    return report
