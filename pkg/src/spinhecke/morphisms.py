"""The superalgebra isomorphisms and the rational <-> trigonometric maps.

Each morphism stores a generator-image table; application decomposes a basis
monomial into its generator word and multiplies the images in the target.
Targets of the form C_n (x) A are realized by :class:`TensorSignature`,
whose multiplication inserts the Koszul sign (-1)^{|b'||c|} between slots.

Verification is by well-definedness: every defining relation of the source,
kept as a free token word, is mapped and normalized in the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import algebras as alg
from . import structure as st
from .engine import AlgebraError, Element, element_from_terms, generator_element
from .render import element_str, mono_str
from .reports import Report
from .scalars import ONE, Scalar, W

__all__ = [
    "TensorSignature",
    "Morphism",
    "tensor_with_clifford",
    "embed_inner",
    "lift_tensor",
    "apply_morphism",
    "check_homomorphism",
    "check_inverse_pair",
    "check_distinguished_images",
    "compatibility_square",
    "named_morphism",
    "inverse_pairs",
    "MORPHISM_NAMES",
    "rational_to_trig",
    "trig_to_rational",
]

_W_INV = ONE / W
_ODD_TOKENS = frozenset({"xi", "b", "zeta", "t"})


class TensorSignature:
    """C_n (x) A for a spin algebra A, with Koszul-signed multiplication.

    Monomials are pairs ``(bits, inner_mono)``; the Clifford factor sits on
    the left.  The signature quacks like :class:`AlgebraSignature` as far as
    :class:`Element` is concerned.
    """

    def __init__(self, inner):
        if inner.has_clifford:
            raise AlgebraError("tensor factor C_n expects a Clifford-free inner algebra")
        self.inner = inner
        self.n = inner.n
        self.name = f"C(x){inner.name}"
        self.family = f"tensor:{inner.family}"
        self.spin = inner.spin
        self.u_value = inner.u_value
        self.u_scalar = inner.u_scalar
        self._zeros = tuple([0] * inner.n)
        self._mul_cache: dict = {}

    @property
    def one_mono(self):
        return (self._zeros, self.inner.one_mono)

    def parity_mono(self, m) -> int:
        bits, im = m
        return (sum(bits) + self.inner.parity_mono(im)) & 1

    def atomize(self, token):
        if token[0] == "c":
            i = token[1]
            if not 1 <= i <= self.n:
                raise AlgebraError(f"index {i} out of range for c in {self.name}")
            return 1, (("TC", tuple(1 if m == i else 0 for m in range(1, self.n + 1))),)
        sgn, atoms = self.inner.atomize(token)
        return sgn, tuple(("I", a) for a in atoms)

    def generator_tokens(self):
        return [("c", i) for i in range(1, self.n + 1)] + self.inner.generator_tokens()

    def mono_tokens(self, m):
        bits, im = m
        toks = [("c", i) for i, bit in enumerate(bits, start=1) if bit]
        return tuple(toks) + self.inner.mono_tokens(im)

    def _inner_atom_parity(self, atom) -> int:
        kind = atom[0]
        if kind == "G":
            return st.perm_parity(atom[1]) if self.inner.spin else 0
        if kind == "L":
            return (atom[2] & 1) if self.inner.left_var in ("xi", "b") else 0
        if kind == "R":
            return (atom[2] & 1) if self.inner.right_var in ("xi", "b", "zeta") else 0
        return 0

    def normalize(self, word) -> dict:
        out = {self.one_mono: ONE}
        for atom in reversed(word):
            nxt: dict = {}
            for (bits, im), c in out.items():
                if atom[0] == "TC":
                    sgn, nb = st.cliff_mul(atom[1], bits)
                    terms = {(nb, im): ONE if sgn > 0 else -ONE}
                else:
                    ksign = st.koszul_sign(self._inner_atom_parity(atom[1]), sum(bits))
                    terms = {
                        (bits, im2): (c2 if ksign > 0 else -c2)
                        for im2, c2 in self.inner._insert(atom[1], im).items()
                    }
                for m2, c2 in terms.items():
                    acc = nxt.get(m2)
                    val = c * c2 if acc is None else acc + c * c2
                    if val:
                        nxt[m2] = val
                    elif m2 in nxt:
                        del nxt[m2]
            out = nxt
        return out

    def mul_mono(self, m1, m2) -> dict:
        key = (m1, m2)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        bits1, im1 = m1
        bits2, im2 = m2
        sign = st.koszul_sign(self.inner.parity_mono(im1), sum(bits2))
        csgn, bits = st.cliff_mul(bits1, bits2)
        sign *= csgn
        out = {}
        for im, c in self.inner.mul_mono(im1, im2).items():
            out[(bits, im)] = c if sign > 0 else -c
        self._mul_cache[key] = out
        return out

    def relations(self):
        rels = []
        n = self.n
        for i in range(1, n + 1):
            rels.append((f"c{i}^2", [(ONE, (("c", i), ("c", i)))], [(ONE, ())]))
            for j in range(i + 1, n + 1):
                rels.append(
                    (
                        f"anti[c{i},c{j}]",
                        [(ONE, (("c", i), ("c", j)))],
                        [(-ONE, (("c", j), ("c", i)))],
                    )
                )
        for g in self.inner.generator_tokens():
            sgn = -ONE if g[0] in _ODD_TOKENS else ONE
            for i in range(1, n + 1):
                rels.append(
                    (
                        f"koszul[c{i},{g[0]}{g[1]}]",
                        [(ONE, (("c", i), g))],
                        [(sgn, (g, ("c", i)))],
                    )
                )
        rels.extend(self.inner.relations())
        return rels

    def mono_str(self, m) -> str:
        bits, im = m
        pieces = [f"c{i}" for i, bit in enumerate(bits, start=1) if bit]
        inner = mono_str(self.inner, im)
        if inner != "1":
            pieces.append(inner)
        return "*".join(pieces) if pieces else "1"

    def sort_key(self, m):
        bits, im = m
        left, _, _, right = im
        deg = sum(abs(e) for e in left) + sum(abs(e) for e in right)
        return (-deg, bits, im)

    def __repr__(self):
        return f"<{self.name} n={self.n}>"


@lru_cache(maxsize=None)
def tensor_with_clifford(inner) -> TensorSignature:
    return TensorSignature(inner)


def embed_inner(tsig: TensorSignature, elem: Element) -> Element:
    """1 (x) a, for a in the inner factor."""
    if elem.sig is not tsig.inner:
        raise AlgebraError("element does not live in the inner factor")
    return Element(tsig, {(tsig._zeros, m): c for m, c in elem.terms.items()})


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    name: str
    source: object
    target: object
    images: dict

    def image_of(self, token) -> Element:
        img = self.images.get(token)
        if img is None:
            raise AlgebraError(f"{self.name} has no image for generator {token!r}")
        return img


def _expand_token(sig, token):
    """Rewrite a composite token as (sign, sequence of generator tokens)."""
    kind = token[0]
    if kind == "sij":
        word = st.lehmer_word(st.transposition(token[1], token[2], sig.n))
        return 1, [("s", m) for m in word]
    if kind == "oddtr":
        sgn, perm = st.spin_group(sig.n).odd_transposition(token[1], token[2])
        return sgn, [("t", m) for m in st.lehmer_word(perm)]
    if kind == "perm":
        letter = "t" if sig.spin else "s"
        return 1, [(letter, m) for m in st.lehmer_word(token[1])]
    if kind == "E":
        toks = []
        for i, e in enumerate(token[1], start=1):
            toks += [("e" if e > 0 else "einv", i)] * abs(e)
        return 1, toks
    return 1, [token]


def apply_morphism(m: Morphism, a: Element) -> Element:
    """Linear, multiplicative extension of the generator images."""
    if a.sig is not m.source:
        raise AlgebraError(f"element is not in the source of {m.name}")
    out = Element.zero(m.target)
    for mono, coeff in a.terms.items():
        img = Element.one(m.target)
        for tok in m.source.mono_tokens(mono):
            img = img * m.image_of(tok)
        out = out + img.scale(coeff)
    return out


def _apply_to_terms(m: Morphism, terms) -> Element:
    out = Element.zero(m.target)
    for coeff, word in terms:
        img = Element.one(m.target)
        for tok in word:
            sgn, gens = _expand_token(m.source, tok)
            if sgn < 0:
                img = -img
            for g in gens:
                img = img * m.image_of(g)
        out = out + img.scale(coeff)
    return out


def check_homomorphism(m: Morphism) -> Report:
    """Map each defining source relation as a free word; the image of
    LHS - RHS must normalize to zero in the target."""
    report = Report(f"hom[{m.name}, n={m.source.n}]")
    for rel_id, lhs, rhs in m.source.relations():
        diff = _apply_to_terms(m, lhs) - _apply_to_terms(m, rhs)
        report.add(rel_id, diff.is_zero, None if diff.is_zero else element_str(diff))
    return report


def check_inverse_pair(f: Morphism, g: Morphism, f_back: Morphism | None = None) -> Report:
    """g(f(x)) = x on f's generators and f(g(y)) = y on g's; ``f_back``
    substitutes for f on the return trip when g lands in an extension of
    f's source (the localized algebras)."""
    fb = f_back if f_back is not None else f
    report = Report(f"inverse[{f.name},{g.name}]")
    for tok in f.source.generator_tokens():
        expected = generator_element(g.target, tok)
        got = apply_morphism(g, apply_morphism(f, generator_element(f.source, tok)))
        ok = got == expected
        report.add(f"{g.name}o{f.name}[{tok[0]}{tok[1]}]", ok, None if ok else element_str(got))
    for tok in g.source.generator_tokens():
        expected = generator_element(fb.target, tok)
        got = apply_morphism(fb, apply_morphism(g, generator_element(g.source, tok)))
        ok = got == expected
        report.add(f"{fb.name}o{g.name}[{tok[0]}{tok[1]}]", ok, None if ok else element_str(got))
    return report


# ---------------------------------------------------------------------------
# The named morphisms
# ---------------------------------------------------------------------------

def _cw_pair(c_index: int, letter, sign_flip: bool):
    """(1/w)(c_i - c_{i+1}) * letter as image terms (or the flipped order)."""
    i = c_index
    first, second = (i + 1, i) if sign_flip else (i, i + 1)
    return [
        (_W_INV, (("c", first), letter)),
        (-_W_INV, (("c", second), letter)),
    ]


def _images(sig, table) -> dict:
    return {tok: element_from_terms(sig, terms) for tok, terms in table.items()}


@lru_cache(maxsize=None)
def named_morphism(name: str, n: int) -> Morphism:
    if name == "PhiFin":
        src, tgt = alg.clifford_sym(n), tensor_with_clifford(alg.spin_sym(n))
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("s", i): _cw_pair(i, ("t", i), False) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "PsiFin":
        src, tgt = tensor_with_clifford(alg.spin_sym(n)), alg.clifford_sym(n)
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("t", i): _cw_pair(i, ("s", i), True) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "PhiHat":
        src, tgt = alg.affine_hc(n), tensor_with_clifford(alg.spin_affine(n))
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("a", i): [(W, (("c", i), ("b", i)))] for i in range(1, n + 1)})
        table.update({("s", i): _cw_pair(i, ("t", i), False) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "PsiHat":
        src, tgt = tensor_with_clifford(alg.spin_affine(n)), alg.affine_hc(n)
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("b", i): [(_W_INV, (("c", i), ("a", i)))] for i in range(1, n + 1)})
        table.update({("t", i): _cw_pair(i, ("s", i), True) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "Phi":
        src, tgt = alg.dahca(n), tensor_with_clifford(alg.sdaha(n))
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("y", i): [(ONE, (("y", i),))] for i in range(1, n + 1)})
        table.update({("x", i): [(W, (("c", i), ("xi", i)))] for i in range(1, n + 1)})
        table.update({("s", i): _cw_pair(i, ("t", i), False) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "Psi":
        src, tgt = tensor_with_clifford(alg.sdaha(n)), alg.dahca(n)
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("y", i): [(ONE, (("y", i),))] for i in range(1, n + 1)})
        table.update({("xi", i): [(_W_INV, (("c", i), ("x", i)))] for i in range(1, n + 1)})
        table.update({("t", i): _cw_pair(i, ("s", i), True) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "PhiTr":
        src, tgt = alg.trig_dahca(n), tensor_with_clifford(alg.trig_sdaha(n))
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        for i in range(1, n + 1):
            table[("e", i)] = [(ONE, (("e", i),))]
            table[("einv", i)] = [(ONE, (("einv", i),))]
            table[("epsv", i)] = [(W, (("c", i), ("zeta", i)))]
        table.update({("s", i): _cw_pair(i, ("t", i), False) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "PsiTr":
        src, tgt = tensor_with_clifford(alg.trig_sdaha(n)), alg.trig_dahca(n)
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        for i in range(1, n + 1):
            table[("e", i)] = [(ONE, (("e", i),))]
            table[("einv", i)] = [(ONE, (("einv", i),))]
            table[("zeta", i)] = [(_W_INV, (("c", i), ("epsv", i)))]
        table.update({("t", i): _cw_pair(i, ("s", i), True) for i in range(1, n)})
        return Morphism(name, src, tgt, _images(tgt, table))
    if name in ("Iota", "IotaLoc"):
        src = alg.dahca(n) if name == "Iota" else alg.dahca_localized(n)
        tgt = alg.trig_dahca(n)
        u = tgt.u_scalar
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("s", i): [(ONE, (("s", i),))] for i in range(1, n)})
        for i in range(1, n + 1):
            table[("y", i)] = [(ONE, (("e", i),))]
            terms = [(ONE, (("einv", i), ("epsv", i)))]
            for k in range(1, i):
                terms.append((-u, (("einv", i), ("sij", k, i))))
                terms.append((u, (("einv", i), ("c", i), ("c", k), ("sij", k, i))))
            table[("x", i)] = terms
            if name == "IotaLoc":
                table[("yinv", i)] = [(ONE, (("einv", i),))]
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "J":
        src, tgt = alg.trig_dahca(n), alg.dahca_localized(n)
        u = tgt.u_scalar
        table = {("c", i): [(ONE, (("c", i),))] for i in range(1, n + 1)}
        table.update({("s", i): [(ONE, (("s", i),))] for i in range(1, n)})
        for i in range(1, n + 1):
            table[("e", i)] = [(ONE, (("y", i),))]
            table[("einv", i)] = [(ONE, (("yinv", i),))]
            terms = [(ONE, (("y", i), ("x", i)))]
            for k in range(1, i):
                terms.append((u, (("sij", k, i),)))
                terms.append((-u, (("c", i), ("c", k), ("sij", k, i))))
            table[("epsv", i)] = terms
        return Morphism(name, src, tgt, _images(tgt, table))
    if name in ("IotaMinus", "IotaMinusLoc"):
        src = alg.sdaha(n) if name == "IotaMinus" else alg.sdaha_localized(n)
        tgt = alg.trig_sdaha(n)
        u = tgt.u_scalar
        table = {("t", i): [(ONE, (("t", i),))] for i in range(1, n)}
        for i in range(1, n + 1):
            table[("y", i)] = [(ONE, (("e", i),))]
            terms = [(ONE, (("einv", i), ("zeta", i)))]
            for k in range(1, i):
                terms.append((-u, (("einv", i), ("oddtr", k, i))))
            table[("xi", i)] = terms
            if name == "IotaMinusLoc":
                table[("yinv", i)] = [(ONE, (("einv", i),))]
        return Morphism(name, src, tgt, _images(tgt, table))
    if name == "JMinus":
        src, tgt = alg.trig_sdaha(n), alg.sdaha_localized(n)
        u = tgt.u_scalar
        table = {("t", i): [(ONE, (("t", i),))] for i in range(1, n)}
        for i in range(1, n + 1):
            table[("e", i)] = [(ONE, (("y", i),))]
            table[("einv", i)] = [(ONE, (("yinv", i),))]
            terms = [(ONE, (("y", i), ("xi", i)))]
            for k in range(1, i):
                terms.append((u, (("oddtr", k, i),)))
            table[("zeta", i)] = terms
        return Morphism(name, src, tgt, _images(tgt, table))
    raise ValueError(f"unknown morphism {name!r}")


MORPHISM_NAMES = (
    "PhiFin",
    "PsiFin",
    "PhiHat",
    "PsiHat",
    "Phi",
    "Psi",
    "PhiTr",
    "PsiTr",
    "Iota",
    "J",
    "IotaMinus",
    "JMinus",
)


def inverse_pairs(n: int) -> list:
    """The verified inverse pairs (f, g, f_back)."""
    return [
        ("PhiFin/PsiFin", named_morphism("PhiFin", n), named_morphism("PsiFin", n), None),
        ("PhiHat/PsiHat", named_morphism("PhiHat", n), named_morphism("PsiHat", n), None),
        ("Phi/Psi", named_morphism("Phi", n), named_morphism("Psi", n), None),
        ("PhiTr/PsiTr", named_morphism("PhiTr", n), named_morphism("PsiTr", n), None),
        ("Iota/J", named_morphism("Iota", n), named_morphism("J", n),
         named_morphism("IotaLoc", n)),
        ("IotaMinus/JMinus", named_morphism("IotaMinus", n), named_morphism("JMinus", n),
         named_morphism("IotaMinusLoc", n)),
    ]


def rational_to_trig(kind: str, a: Element) -> Element:
    """Apply iota (kind='Iota') or iota^- (kind='IotaMinus')."""
    m = named_morphism(kind, a.sig.n)
    return apply_morphism(m, a)


def trig_to_rational(kind: str, a: Element) -> Element:
    """Apply j (kind='J') or j^- (kind='JMinus'); lands in the localized
    rational algebra."""
    m = named_morphism(kind, a.sig.n)
    return apply_morphism(m, a)


def lift_tensor(m: Morphism) -> Morphism:
    """id (x) m between Clifford tensor extensions."""
    src = tensor_with_clifford(m.source)
    tgt = tensor_with_clifford(m.target)
    images = {("c", i): generator_element(tgt, ("c", i)) for i in range(1, m.source.n + 1)}
    for tok, img in m.images.items():
        images[tok] = embed_inner(tgt, img)
    return Morphism(f"1x{m.name}", src, tgt, images)


def check_distinguished_images(n: int) -> Report:
    """The image formulas for the intertwiners, the Jucys-Murphy elements,
    the embedded affine generators, and the odd transpositions."""
    from . import clifford_family as cf
    from . import spin_family as sf

    report = Report(f"distinguished[n={n}]")
    phi_hat = named_morphism("PhiHat", n)
    tgt_hat = phi_hat.target
    for i in range(1, n):
        lhs = apply_morphism(phi_hat, cf.intertwiner_phi(i, phi_hat.source))
        psi = embed_inner(tgt_hat, sf.intertwiner_psi(i, tgt_hat.inner))
        cterm = generator_element(tgt_hat, ("c", i)) - generator_element(tgt_hat, ("c", i + 1))
        rhs = (cterm * psi).scale(-W)
        ok = lhs == rhs
        report.add(f"PhiHat(phi{i})", ok, None if ok else element_str(lhs - rhs))
    phi = named_morphism("Phi", n)
    tgt = phi.target
    for i in range(1, n + 1):
        lhs = apply_morphism(phi, cf.jucys_murphy(i, phi.source))
        rhs = (
            generator_element(tgt, ("c", i)) * embed_inner(tgt, sf.odd_jm(i, tgt.inner))
        ).scale(W)
        ok = lhs == rhs
        report.add(f"Phi(M{i})", ok, None if ok else element_str(lhs - rhs))
    for alpha in (Scalar.from_rational(0), ONE, Scalar.u_power(1)):
        for i in range(1, n + 1):
            src_elt = generator_element(phi.source, ("x", i)).scale(alpha) + cf.z_element(
                i, phi.source
            )
            lhs = apply_morphism(phi, src_elt)
            inner = generator_element(tgt.inner, ("xi", i)).scale(alpha) + sf.frak_z(
                i, tgt.inner
            )
            rhs = (generator_element(tgt, ("c", i)) * embed_inner(tgt, inner)).scale(W)
            ok = lhs == rhs
            report.add(
                f"Phi(a*x{i}+z{i})[alpha={alpha.render()}]",
                ok,
                None if ok else element_str(lhs - rhs),
            )
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if i == k:
                continue
            src_elt = element_from_terms(
                phi.source,
                [
                    (_W_INV, (("c", i), ("sij", i, k))),
                    (-_W_INV, (("c", k), ("sij", i, k))),
                ],
            )
            lhs = apply_morphism(phi, src_elt)
            rhs = embed_inner(tgt, sf.odd_transposition(k, i, tgt.inner))
            ok = lhs == rhs
            report.add(f"Phi(tr[{k},{i}])", ok, None if ok else element_str(lhs - rhs))
    return report


def compatibility_square(n: int) -> Report:
    """(1 (x) iota^-) o Phi = PhiTr o iota on the rational generators."""
    phi = named_morphism("Phi", n)
    phi_tr = named_morphism("PhiTr", n)
    iota = named_morphism("Iota", n)
    lifted = lift_tensor(named_morphism("IotaMinus", n))
    report = Report(f"compat-square[n={n}]")
    for tok in phi.source.generator_tokens():
        a = generator_element(phi.source, tok)
        left = apply_morphism(lifted, apply_morphism(phi, a))
        right = apply_morphism(phi_tr, apply_morphism(iota, a))
        ok = left == right
        report.add(f"square[{tok[0]}{tok[1]}]", ok, None if ok else element_str(left - right))
    return report
