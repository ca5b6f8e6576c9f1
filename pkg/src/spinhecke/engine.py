"""Generic PBW normal-form rewriting for the presented superalgebras.

A monomial is a 4-slot tuple ``(left, grp, cliff, right)``:

* ``left``  -- exponent vector of the left polynomial slot (x, a, b, xi, or
  the Laurent weight of e^lambda), ``()`` if the slot is absent;
* ``grp``   -- a permutation in one-line notation (the group slot holds
  sigma for the plain algebras and the basis label of t_sigma for spin ones);
* ``cliff`` -- Clifford bit vector, ``()`` if absent;
* ``right`` -- exponent vector of the right polynomial slot.

Multiplication concatenates the atom expansions of two monomials and
straightens the word by rightmost-innermost local rewrites.  Every rule
either swaps an adjacent misordered pair (possibly with a sign) or replaces
it by lower-degree correction terms, so the procedure terminates; the
confluence suite checks independence of the result from association order.
"""

from __future__ import annotations

import sys
from random import Random

from . import structure as st
from .reports import Report
from .scalars import ONE, Scalar, QOmega

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))

__all__ = [
    "AlgebraSignature",
    "Element",
    "AlgebraError",
    "generator_element",
    "element_from_terms",
    "monomial_element",
    "bracket",
    "super_bracket",
    "verify_relations",
    "confluence_probe",
    "random_monomial",
]

_MINUS_ONE = Scalar.from_rational(-1)
_ODD_VARS = frozenset({"xi", "b", "zeta"})
_RANK = {"L": 0, "E": 0, "G": 1, "C": 2, "R": 3}


class AlgebraError(ValueError):
    """Unknown generator, index out of range, or algebra mismatch."""


class AlgebraSignature:
    """Slot layout, parity rule and rewrite behaviour of one presentation.

    Instances are created by the factories in :mod:`spinhecke.algebras` and
    interned there, so identity comparison is meaningful.
    """

    def __init__(
        self,
        name: str,
        family: str,
        n: int,
        *,
        spin: bool,
        has_clifford: bool,
        left_var: str | None,
        right_var: str | None,
        left_laurent: bool = False,
        right_laurent: bool = False,
        u_value: QOmega | None = None,
        relations_builder=None,
    ):
        if n < 2:
            raise AlgebraError("rank n must be at least 2")
        self.name = name
        self.family = family
        self.n = n
        self.spin = spin
        self.has_clifford = has_clifford
        self.left_var = left_var
        self.right_var = right_var
        self.left_laurent = left_laurent
        self.right_laurent = right_laurent
        self.u_value = u_value
        self.u_scalar = Scalar.u_power(1) if u_value is None else Scalar.from_qomega(u_value)
        self._relations_builder = relations_builder
        self._relations = None
        self._id = st.identity(n)
        self._zeros = tuple([0] * n)
        self._norm_cache: dict = {}
        self._mul_cache: dict = {}

    # -- basic monomial helpers ---------------------------------------------

    @property
    def one_mono(self) -> tuple:
        return (
            self._zeros if self.left_var else (),
            self._id,
            self._zeros if self.has_clifford else (),
            self._zeros if self.right_var else (),
        )

    def parity_mono(self, m: tuple) -> int:
        left, grp, cliff, right = m
        p = 0
        if cliff:
            p ^= sum(cliff) & 1
        if self.spin:
            p ^= st.perm_parity(grp)
        if self.left_var in _ODD_VARS:
            p ^= sum(left) & 1
        if self.right_var in _ODD_VARS:
            p ^= sum(right) & 1
        return p

    def _check_index(self, i: int, gen: str, top: int | None = None) -> None:
        hi = self.n if top is None else top
        if not 1 <= i <= hi:
            raise AlgebraError(f"index {i} out of range 1..{hi} for {gen!r} in {self.name}")

    # -- tokens ---------------------------------------------------------------

    def atomize(self, token: tuple) -> tuple:
        """Return (sign, atoms) for a single generator token."""
        kind = token[0]
        n = self.n
        if kind in ("x", "y", "a", "b", "xi", "epsv", "zeta"):
            i = token[1]
            self._check_index(i, kind)
            if self.left_var == kind:
                return 1, (("L", i, 1),)
            if self.right_var == kind:
                return 1, (("R", i, 1),)
            raise AlgebraError(f"generator {kind}{i} does not belong to {self.name}")
        if kind == "yinv":
            i = token[1]
            self._check_index(i, "y")
            if self.right_var == "y" and self.right_laurent:
                return 1, (("R", i, -1),)
            raise AlgebraError(f"y{i}^-1 needs the localized form of {self.name}")
        if kind in ("e", "einv"):
            i = token[1]
            self._check_index(i, "e")
            if not self.left_laurent:
                raise AlgebraError(f"generator e^(eps_{i}) does not belong to {self.name}")
            vec = [0] * n
            vec[i - 1] = 1 if kind == "e" else -1
            return 1, (("E", tuple(vec)),)
        if kind == "E":
            if not self.left_laurent:
                raise AlgebraError(f"Laurent weights do not belong to {self.name}")
            vec = tuple(token[1])
            return 1, ((("E", vec),) if any(vec) else ())
        if kind == "c":
            i = token[1]
            self._check_index(i, "c")
            if not self.has_clifford:
                raise AlgebraError(f"generator c{i} does not belong to {self.name}")
            bits = tuple(1 if m == i else 0 for m in range(1, n + 1))
            return 1, (("C", bits),)
        if kind == "s":
            i = token[1]
            self._check_index(i, "s", self.n - 1)
            if self.spin:
                raise AlgebraError(f"{self.name} uses odd generators t{i}, not s{i}")
            return 1, (("G", st.transposition(i, i + 1, n)),)
        if kind == "t":
            i = token[1]
            self._check_index(i, "t", self.n - 1)
            if not self.spin:
                raise AlgebraError(f"{self.name} uses even generators s{i}, not t{i}")
            return 1, (("G", st.transposition(i, i + 1, n)),)
        if kind == "sij":
            i, j = token[1], token[2]
            self._check_index(i, "s(i,j)")
            self._check_index(j, "s(i,j)")
            if self.spin:
                raise AlgebraError(f"{self.name} has no even transpositions")
            return 1, (("G", st.transposition(i, j, n)),)
        if kind == "oddtr":
            i, j = token[1], token[2]
            self._check_index(i, "tr(i,j)")
            self._check_index(j, "tr(i,j)")
            if not self.spin:
                raise AlgebraError(f"{self.name} has no odd transpositions")
            sgn, perm = st.spin_group(n).odd_transposition(i, j)
            return sgn, (("G", perm),)
        if kind == "perm":
            perm = tuple(token[1])
            if len(perm) != n:
                raise AlgebraError("permutation rank mismatch")
            return 1, ((("G", perm),) if perm != self._id else ())
        raise AlgebraError(f"unknown generator token {token!r} for {self.name}")

    def generator_tokens(self) -> list:
        """The defining generator alphabet, in a fixed order."""
        toks: list = []
        n = self.n
        if self.left_laurent:
            toks += [("e", i) for i in range(1, n + 1)]
            toks += [("einv", i) for i in range(1, n + 1)]
        elif self.left_var:
            toks += [(self.left_var, i) for i in range(1, n + 1)]
        if self.right_var:
            toks += [(self.right_var, i) for i in range(1, n + 1)]
            if self.right_laurent:
                toks += [("yinv", i) for i in range(1, n + 1)]
        if self.has_clifford:
            toks += [("c", i) for i in range(1, n + 1)]
        toks += [("t" if self.spin else "s", i) for i in range(1, n)]
        return toks

    def mono_tokens(self, m: tuple) -> tuple:
        """Decompose a basis monomial into its generator token word."""
        left, grp, cliff, right = m
        toks: list = []
        if self.left_laurent:
            for i, e in enumerate(left, start=1):
                toks += [("e" if e > 0 else "einv", i)] * abs(e)
        else:
            for i, e in enumerate(left, start=1):
                toks += [(self.left_var, i)] * e
        letter = "t" if self.spin else "s"
        toks += [(letter, i) for i in st.lehmer_word(grp)]
        for i, bit in enumerate(cliff, start=1):
            if bit:
                toks.append(("c", i))
        for i, e in enumerate(right, start=1):
            if e >= 0:
                toks += [(self.right_var, i)] * e
            else:
                toks += [("yinv", i)] * (-e)
        return tuple(toks)

    # -- relations ------------------------------------------------------------

    def relations(self) -> list:
        if self._relations is None:
            if self._relations_builder is None:
                raise AlgebraError(f"no relation table attached to {self.name}")
            self._relations = self._relations_builder(self)
        return self._relations

    # -- multiplication -------------------------------------------------------

    def mono_atoms(self, m: tuple) -> tuple:
        left, grp, cliff, right = m
        atoms: list = []
        if self.left_laurent:
            if any(left):
                atoms.append(("E", left))
        else:
            atoms += [("L", i, e) for i, e in enumerate(left, start=1) if e]
        if grp != self._id:
            atoms.append(("G", grp))
        if cliff and any(cliff):
            atoms.append(("C", cliff))
        atoms += [("R", i, e) for i, e in enumerate(right, start=1) if e]
        return tuple(atoms)

    def assemble(self, word: tuple) -> tuple:
        left = list(self._zeros) if (self.left_var and not self.left_laurent) else None
        evec = None
        grp = self._id
        cliff = self._zeros if self.has_clifford else ()
        right = list(self._zeros) if self.right_var else None
        for atom in word:
            kind = atom[0]
            if kind == "L":
                left[atom[1] - 1] += atom[2]
            elif kind == "E":
                evec = atom[1]
            elif kind == "G":
                grp = atom[1]
            elif kind == "C":
                cliff = atom[1]
            else:
                right[atom[1] - 1] += atom[2]
        if self.left_laurent:
            lpart = evec if evec is not None else self._zeros
        else:
            lpart = tuple(left) if left is not None else ()
        rpart = tuple(right) if right is not None else ()
        return (lpart, grp, cliff, rpart)

    def mul_mono(self, m1: tuple, m2: tuple) -> dict:
        key = (m1, m2)
        out = self._mul_cache.get(key)
        if out is None:
            out = {m2: ONE}
            for atom in reversed(self.mono_atoms(m1)):
                out = self._insert_into(atom, out)
            self._mul_cache[key] = out
        return out

    def normalize(self, word: tuple) -> dict:
        """Straighten an atom word; returns {monomial: Scalar}."""
        out = {self.one_mono: ONE}
        for atom in reversed(word):
            out = self._insert_into(atom, out)
        return out

    def _insert_into(self, atom: tuple, terms: dict) -> dict:
        out: dict = {}
        for mono, c in terms.items():
            for m2, c2 in self._insert(atom, mono).items():
                acc = out.get(m2)
                val = c * c2 if acc is None else acc + c * c2
                if val:
                    out[m2] = val
                elif m2 in out:
                    del out[m2]
        return out

    def _insert(self, atom: tuple, mono: tuple) -> dict:
        """atom * mono in normal form; the memoized rewriting primitive."""
        key = (atom, mono)
        cached = self._norm_cache.get(key)
        if cached is not None:
            return cached
        atoms = self.mono_atoms(mono)
        if not atoms or not _pair_reducible(self, atom, atoms[0]):
            out = {self.assemble((atom,) + atoms): ONE}
        else:
            rest = self.assemble(atoms[1:])
            out = {}
            for coeff, repl in _rewrite_pair(self, atom, atoms[0]):
                if coeff.is_zero:
                    continue
                sub = {rest: ONE}
                for a in reversed(repl):
                    sub = self._insert_into(a, sub)
                for m2, c2 in sub.items():
                    acc = out.get(m2)
                    val = coeff * c2 if acc is None else acc + coeff * c2
                    if val:
                        out[m2] = val
                    elif m2 in out:
                        del out[m2]
        self._norm_cache[key] = out
        return out

    def __repr__(self) -> str:
        return f"<{self.name} n={self.n}>"


# ---------------------------------------------------------------------------
# Local rewriting rules
# ---------------------------------------------------------------------------

def _pair_reducible(sig, A: tuple, B: tuple) -> bool:
    ra, rb = _RANK[A[0]], _RANK[B[0]]
    if ra != rb:
        return ra > rb
    return A[0] in ("E", "G", "C") or A[1] >= B[1]


def _wd(*atoms) -> tuple:
    """Assemble a rule output word, dropping trivial atoms."""
    out = []
    for a in atoms:
        if a is None:
            continue
        kind = a[0]
        if kind in ("L", "R") and a[2] == 0:
            continue
        if kind == "E" and not any(a[1]):
            continue
        if kind == "C" and not any(a[1]):
            continue
        out.append(a)
    return tuple(out)


def _bits(sig, *indices) -> tuple:
    return tuple(1 if m in indices else 0 for m in range(1, sig.n + 1))


def _sgn_scalar(s: int) -> Scalar:
    return ONE if s > 0 else _MINUS_ONE


def _cliff_pair_words(sig, coeff: Scalar, i: int, k: int, perm: tuple) -> list:
    """Words for coeff * (1 + c_i c_k) * sigma, with c_i c_k put canonical."""
    cs = 1 if i < k else -1
    return [
        (coeff, _wd(("G", perm))),
        (coeff if cs > 0 else -coeff, _wd(("C", _bits(sig, i, k)), ("G", perm))),
    ]


def _bracket_words(sig, i: int, j: int) -> list:
    """[r_i, l_j] for the rational double affine families, as rule words."""
    n, u = sig.n, sig.u_scalar
    rv, lv = sig.right_var, sig.left_var
    if (rv, lv) == ("y", "x") or (rv, lv) == ("x", "y"):
        neg = rv == "x"
        if neg:
            i, j = j, i  # express through [y_i, x_j]
        if i != j:
            out = _cliff_pair_words(sig, u, i, j, st.transposition(i, j, n))
        else:
            out = []
            for k in range(1, n + 1):
                if k != i:
                    out += _cliff_pair_words(sig, -u, k, i, st.transposition(k, i, n))
        return [(-c, w) for c, w in out] if neg else out
    if (rv, lv) == ("y", "xi") or (rv, lv) == ("xi", "y"):
        neg = rv == "xi"
        if neg:
            i, j = j, i  # express through [y_i, xi_j]
        sg = st.spin_group(n)
        out = []
        if i != j:
            sgn, perm = sg.odd_transposition(i, j)
            out.append((u if sgn > 0 else -u, _wd(("G", perm))))
        else:
            for k in range(1, n + 1):
                if k != i:
                    sgn, perm = sg.odd_transposition(i, k)
                    out.append((u if sgn > 0 else -u, _wd(("G", perm))))
        return [(-c, w) for c, w in out] if neg else out
    raise AlgebraError(f"no polynomial cross relation in {sig.name}")


def trig_comm_word_terms(sig, i: int, eta: tuple) -> list:
    """Rule words for the defining commutator [r_i, e^eta]: the divided
    difference against e^eta is expanded as an exact geometric sum."""
    n, u = sig.n, sig.u_scalar
    out = []
    for k in range(1, n + 1):
        if k == i:
            continue
        d = eta[i - 1] - eta[k - 1]
        if d == 0:
            continue
        s = 1 if k > i else -1
        dd = s * d
        mrange = range(0, dd) if dd > 0 else range(dd, 0)
        gsign = 1 if dd > 0 else -1
        for m in mrange:
            vec = list(eta)
            vec[k - 1] += m * s
            vec[i - 1] -= m * s
            weight = tuple(vec)
            coeff = u if s * gsign > 0 else -u
            if sig.spin:
                otsgn, perm = st.spin_group(n).odd_transposition(k, i)
                out.append((coeff if otsgn > 0 else -coeff, _wd(("E", weight), ("G", perm))))
            else:
                perm = st.transposition(k, i, n)
                cs = 1 if i < k else -1
                out.append((coeff, _wd(("E", weight), ("G", perm))))
                out.append(
                    (-coeff if cs > 0 else coeff,
                     _wd(("E", weight), ("C", _bits(sig, i, k)), ("G", perm)))
                )
    return out


def _affine_gen_left_words(sig, m: int, i: int, k: int) -> list:
    """s_m * a_i^k (resp. t_m * b_i^k) as rule words, peeling one letter."""
    sm = st.transposition(m, m + 1, sig.n)
    if sig.left_var == "a":
        if i != m and i != m + 1:
            return [(ONE, _wd(("L", i, k), ("G", sm)))]
        if i == m:
            rest = ("L", m, k - 1)
            return [
                (ONE, _wd(("L", m + 1, 1), ("G", sm), rest)),
                (_MINUS_ONE, _wd(rest)),
                (_MINUS_ONE, _wd(("C", _bits(sig, m, m + 1)), rest)),
            ]
        rest = ("L", m + 1, k - 1)
        return [
            (ONE, _wd(("L", m, 1), ("G", sm), rest)),
            (ONE, _wd(rest)),
            (_MINUS_ONE, _wd(("C", _bits(sig, m, m + 1)), rest)),
        ]
    # spin affine: b letters
    if i != m and i != m + 1:
        return [(_sgn_scalar(-1 if k & 1 else 1), _wd(("L", i, k), ("G", sm)))]
    if i == m:
        rest = ("L", m, k - 1)
        return [
            (ONE, _wd(rest)),
            (_MINUS_ONE, _wd(("L", m + 1, 1), ("G", sm), rest)),
        ]
    rest = ("L", m + 1, k - 1)
    return [
        (ONE, _wd(rest)),
        (_MINUS_ONE, _wd(("L", m, 1), ("G", sm), rest)),
    ]


def _affine_right_gen_words(sig, i: int, k: int, m: int) -> list:
    """epsv_i^k * s_m (resp. zeta_i^k * t_m) as rule words."""
    u = sig.u_scalar
    sm = st.transposition(m, m + 1, sig.n)
    if sig.right_var == "epsv":
        if i != m and i != m + 1:
            return [(ONE, _wd(("G", sm), ("R", i, k)))]
        if i == m:
            rest = ("R", m, k - 1)
            return [
                (ONE, _wd(rest, ("G", sm), ("R", m + 1, 1))),
                (-u, _wd(rest)),
                (u, _wd(rest, ("C", _bits(sig, m, m + 1)))),
            ]
        rest = ("R", m + 1, k - 1)
        return [
            (ONE, _wd(rest, ("G", sm), ("R", m, 1))),
            (u, _wd(rest)),
            (u, _wd(rest, ("C", _bits(sig, m, m + 1)))),
        ]
    # zeta letters are odd
    if i != m and i != m + 1:
        return [(_sgn_scalar(-1 if k & 1 else 1), _wd(("G", sm), ("R", i, k)))]
    if i == m:
        rest = ("R", m, k - 1)
        return [
            (_MINUS_ONE, _wd(rest, ("G", sm), ("R", m + 1, 1))),
            (u, _wd(rest)),
        ]
    rest = ("R", m + 1, k - 1)
    return [
        (_MINUS_ONE, _wd(rest, ("G", sm), ("R", m, 1))),
        (u, _wd(rest)),
    ]


def _rewrite_pair(sig, A: tuple, B: tuple) -> list:
    ka, kb = A[0], B[0]

    if ka == kb:
        if ka in ("L", "R"):
            i, p = A[1], A[2]
            j, q = B[1], B[2]
            if i == j:
                return [(ONE, _wd((ka, i, p + q)))]
            var = sig.left_var if ka == "L" else sig.right_var
            sgn = -1 if (var in _ODD_VARS and (p & 1) and (q & 1)) else 1
            return [(_sgn_scalar(sgn), (B, A))]
        if ka == "E":
            vec = tuple(a + b for a, b in zip(A[1], B[1]))
            return [(ONE, _wd(("E", vec)))]
        if ka == "G":
            p, q = A[1], B[1]
            sgn = st.spin_group(sig.n).beta(p, q) if sig.spin else 1
            pq = st.compose(p, q)
            word = () if pq == sig._id else (("G", pq),)
            return [(_sgn_scalar(sgn), word)]
        sgn, bits = st.cliff_mul(A[1], B[1])
        return [(_sgn_scalar(sgn), _wd(("C", bits)))]

    if ka == "G":
        p = A[1]
        if kb == "E":
            vec = [0] * sig.n
            for i, e in enumerate(B[1], start=1):
                vec[st.apply_perm(p, i) - 1] = e
            return [(ONE, (("E", tuple(vec)), A))]
        # kb == "L"
        i, k = B[1], B[2]
        var = sig.left_var
        if var in ("x", "y"):
            return [(ONE, (("L", st.apply_perm(p, i), k), A))]
        if var == "xi":
            sgn = -1 if (st.perm_parity(p) and (k & 1)) else 1
            return [(_sgn_scalar(sgn), (("L", st.apply_perm(p, i), k), A))]
        # affine corrections: peel the last letter of the canonical word
        word = st.lehmer_word(p)
        m = word[-1]
        ppre = st.compose(p, st.transposition(m, m + 1, sig.n))
        prefix = () if ppre == sig._id else (("G", ppre),)
        return [(c, prefix + w) for c, w in _affine_gen_left_words(sig, m, i, k)]

    if ka == "C":
        if kb == "G":
            sgn, bits = st.cliff_conj(st.inverse(B[1]), A[1])
            return [(_sgn_scalar(sgn), (B, ("C", bits)))]
        if kb == "E":
            return [(ONE, (B, A))]
        # kb == "L": only even left letters coexist with the Clifford slot
        i, k = B[1], B[2]
        sgn = -1 if (sig.left_var in ("x", "a") and A[1][i - 1] and (k & 1)) else 1
        return [(_sgn_scalar(sgn), (B, A))]

    # ka == "R"
    i, k = A[1], A[2]
    if kb == "C":
        sgn = -1 if (sig.right_var in ("x", "epsv") and B[1][i - 1] and (k & 1)) else 1
        return [(_sgn_scalar(sgn), (B, A))]
    if kb == "G":
        p = B[1]
        var = sig.right_var
        if var in ("y", "x"):
            return [(ONE, (B, ("R", st.apply_perm(st.inverse(p), i), k)))]
        if var == "xi":
            sgn = -1 if (st.perm_parity(p) and (k & 1)) else 1
            return [(_sgn_scalar(sgn), (B, ("R", st.apply_perm(st.inverse(p), i), k)))]
        # affine corrections: peel the first letter of the canonical word
        word = st.lehmer_word(p)
        m = word[0]
        psuf = st.compose(st.transposition(m, m + 1, sig.n), p)
        suffix = () if psuf == sig._id else (("G", psuf),)
        return [(c, w + suffix) for c, w in _affine_right_gen_words(sig, i, k, m)]
    if kb == "E":
        lam = B[1]
        j0 = next(pos for pos, e in enumerate(lam) if e)
        unit = [0] * sig.n
        unit[j0] = 1 if lam[j0] > 0 else -1
        unit = tuple(unit)
        rest = tuple(a - b for a, b in zip(lam, unit))
        head = ("R", i, k - 1)
        out = [(ONE, _wd(head, ("E", unit), ("R", i, 1), ("E", rest)))]
        for c, w in trig_comm_word_terms(sig, i, unit):
            out.append((c, _wd(head) + w + _wd(("E", rest))))
        return out
    # kb == "L": the rational double affine cross relation
    j, l = B[1], B[2]
    if k > 0:
        out = [(ONE, _wd(("R", i, k - 1), ("L", j, 1), ("R", i, 1), ("L", j, l - 1)))]
        for c, w in _bracket_words(sig, i, j):
            out.append((c, _wd(("R", i, k - 1)) + w + _wd(("L", j, l - 1))))
        return out
    # negative (localized) powers: y^k x = y^{k+1} (x y^{-1} - y^{-1}[y,x]y^{-1})
    out = [(ONE, _wd(("R", i, k + 1), ("L", j, 1), ("R", i, -1), ("L", j, l - 1)))]
    for c, w in _bracket_words(sig, i, j):
        out.append((-c, _wd(("R", i, k)) + w + _wd(("R", i, -1), ("L", j, l - 1))))
    return out


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class Element:
    """A finite Scalar-linear combination of basis monomials of one algebra."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig, terms: dict | None = None):
        self.sig = sig
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, sig) -> "Element":
        return cls(sig)

    @classmethod
    def one(cls, sig) -> "Element":
        return cls(sig, {sig.one_mono: ONE})

    @classmethod
    def scalar(cls, sig, c: Scalar) -> "Element":
        return cls(sig, {sig.one_mono: c})

    # -- ring operations ------------------------------------------------------

    def _compatible(self, other: "Element") -> None:
        if self.sig is not other.sig:
            raise AlgebraError(
                f"algebra mismatch: {self.sig.name}(n={self.sig.n}) vs "
                f"{other.sig.name}(n={other.sig.n})"
            )

    def __add__(self, other: "Element") -> "Element":
        self._compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            val = c if acc is None else acc + c
            if val:
                out[m] = val
            elif m in out:
                del out[m]
        return Element(self.sig, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.sig, {m: -c for m, c in self.terms.items()})

    def scale(self, c: Scalar) -> "Element":
        if c.is_zero:
            return Element(self.sig)
        return Element(self.sig, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        self._compatible(other)
        sig = self.sig
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in sig.mul_mono(m1, m2).items():
                    acc = out.get(m)
                    val = c12 * c if acc is None else acc + c12 * c
                    if val:
                        out[m] = val
                    elif m in out:
                        del out[m]
        return Element(sig, out)

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            inv = self._invert_monomial()
            return inv ** (-k)
        out = Element.one(self.sig)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _invert_monomial(self) -> "Element":
        if len(self.terms) != 1:
            raise AlgebraError("only invertible monomials can be raised to negative powers")
        (mono, coeff), = self.terms.items()
        left, grp, cliff, right = mono
        sig = self.sig
        inv_c = ONE / coeff
        if sig.left_laurent and any(left) and grp == sig._id and not any(cliff) and not any(right):
            return Element(sig, {(tuple(-e for e in left), grp, cliff, right): inv_c})
        if sig.right_laurent and any(right) and grp == sig._id and not any(cliff) and (
            not left or not any(left)
        ):
            return Element(sig, {(left, grp, cliff, tuple(-e for e in right)): inv_c})
        if mono == sig.one_mono:
            return Element(sig, {mono: inv_c})
        raise AlgebraError("monomial is not invertible in this algebra")

    # -- inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.sig is other.sig
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.sig), tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def parity(self) -> str:
        seen = {self.sig.parity_mono(m) for m in self.terms}
        if not seen:
            return "even"
        if seen == {0}:
            return "even"
        if seen == {1}:
            return "odd"
        return "mixed"

    def specialize_coefficients(self, u0: QOmega, target_sig) -> "Element":
        out: dict = {}
        for m, c in self.terms.items():
            val = c.eval(u0)
            if val:
                out[m] = Scalar.from_qomega(val)
        return Element(target_sig, out)

    def __repr__(self) -> str:
        from .render import element_str  # local import to keep layering simple

        return f"<{self.sig.name} element {element_str(self)}>"


def monomial_element(sig, mono: tuple, coeff: Scalar = ONE) -> Element:
    return Element(sig, {mono: coeff})


def generator_element(sig, token: tuple) -> Element:
    sgn, atoms = sig.atomize(token)
    terms = sig.normalize(atoms)
    out = Element(sig, dict(terms))
    return out if sgn > 0 else -out


def element_from_terms(sig, terms) -> Element:
    """Evaluate [(Scalar, token word), ...] to a normal-form Element."""
    out: dict = {}
    for coeff, word in terms:
        sgn = 1
        atoms: tuple = ()
        for tok in word:
            s, a = sig.atomize(tok)
            sgn *= s
            atoms += a
        eff = coeff if sgn > 0 else -coeff
        if eff.is_zero:
            continue
        for m, c in sig.normalize(atoms).items():
            acc = out.get(m)
            val = eff * c if acc is None else acc + eff * c
            if val:
                out[m] = val
            elif m in out:
                del out[m]
    return Element(sig, out)


def bracket(a: Element, b: Element) -> Element:
    """The commutator ab - ba."""
    return a * b - b * a


def super_bracket(a: Element, b: Element, plus: bool | None = None) -> Element:
    """ab + ba when ``plus`` (default: both arguments homogeneous odd)."""
    if plus is None:
        plus = a.parity() == "odd" and b.parity() == "odd"
    return a * b + b * a if plus else a * b - b * a


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

def verify_relations(sig) -> Report:
    """Normalize LHS - RHS of every defining relation instance."""
    from .render import element_str

    report = Report(f"relations[{sig.name}, n={sig.n}]")
    for rel_id, lhs, rhs in sig.relations():
        diff = element_from_terms(sig, lhs) - element_from_terms(sig, rhs)
        report.add(rel_id, diff.is_zero, None if diff.is_zero else element_str(diff))
    return report


def random_monomial(sig, rng: Random, degree_bound: int) -> tuple:
    n = sig.n
    if sig.left_laurent:
        left = [0] * n
        for _ in range(rng.randint(0, degree_bound)):
            left[rng.randrange(n)] += rng.choice((-1, 1))
        left = tuple(left)
    elif sig.left_var:
        left = [0] * n
        for _ in range(rng.randint(0, degree_bound)):
            left[rng.randrange(n)] += 1
        left = tuple(left)
    else:
        left = ()
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    grp = tuple(perm)
    cliff = tuple(rng.randint(0, 1) for _ in range(n)) if sig.has_clifford else ()
    if sig.right_var:
        right = [0] * n
        for _ in range(rng.randint(0, degree_bound)):
            right[rng.randrange(n)] += 1
        right = tuple(right)
    else:
        right = ()
    return (left, grp, cliff, right)


def confluence_probe(sig, trials: int, degree_bound: int, seed: int) -> Report:
    """Random associativity and re-normalization idempotence probes."""
    from .render import mono_str

    rng = Random(seed)
    report = Report(f"confluence[{sig.name}, n={sig.n}]")
    for trial in range(trials):
        a = random_monomial(sig, rng, degree_bound)
        b = random_monomial(sig, rng, degree_bound)
        c = random_monomial(sig, rng, degree_bound)
        ea, eb, ec = (monomial_element(sig, m) for m in (a, b, c))
        left = (ea * eb) * ec
        right = ea * (eb * ec)
        ok = left == right
        report.add(
            f"assoc[{trial:04d}]",
            ok,
            None if ok else f"({mono_str(sig, a)})({mono_str(sig, b)})({mono_str(sig, c)})",
        )
        again = {}
        for m, coeff in left.terms.items():
            for m2, c2 in sig.normalize(sig.mono_atoms(m)).items():
                again[m2] = again.get(m2, Scalar.from_rational(0)) + coeff * c2
        ok2 = Element(sig, again) == left
        report.add(f"idem[{trial:04d}]", ok2, None if ok2 else mono_str(sig, a))
    return report
