"""The deformed Weyl algebra W_q(n) with exact normal ordering.

W_q(n) is generated by a_i^+, a_i^-, kappa_i^{±1} (i = 1..n, kappa_i is the
group-like q^{N_i}) subject to

    kappa_i kappa_i^-1 = 1,
    kappa_i a_j^±  = q^{±delta_ij} a_j^± kappa_i,
    a_i^- a_i^+ - q^{±1} a_i^+ a_i^-  = (2/(q^(1/2)+q^(-1/2))) kappa_i^{∓1},
    a_i^xi a_j^eta = q^{xi*eta} a_j^eta a_i^xi   (i < j, signs xi,eta = ±1).

Both sign choices of the third line are imposed; their difference is the
*contraction* identity

    a_i^+ a_i^- = c (kappa_i - kappa_i^-1)/(q - q^-1),   c = 2/(s + s^-1),

so the canonical basis consists of monomials

    (a_1^+)^{p_1}..(a_n^+)^{p_n} kappa_1^{z_1}..kappa_n^{z_n}
        (a_n^-)^{d_n}..(a_1^-)^{d_1}         with min(p_i, d_i) = 0.

Two reduction routes are implemented and cross-checked:

- a literal word-rewriting engine (`normal_order` with contract=False uses
  only the local exchange rules above, oriented left-to-right; with
  contract=True a deterministic contraction pass follows).  The engine
  supports leftmost/rightmost strategies and an optional termination-measure
  assertion, which back the confluence property tests.
- a closed-form append calculus (`mul`) that multiplies canonical monomials
  directly; all structure constants were derived from the same relations.

The symbolic Fock module lives here too: `FockVector` over QFrac
coefficients, the ladder action `apply_fock` (optionally truncated at level
k-1 for the root-of-unity module), and the sesquilinear `inner` induced by
<0|0> = 1 with (a_i^-)^dagger = a_i^+.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

from .qcoeff import (
    C_WEYL,
    DPLUS,
    INV_QMQI,
    QCoeff,
    QFrac,
    fock_norm_factor,
    q_int,
)

# A letter is a tuple (kind, mode, exp): kind is one of AP/KA/AM below; mode
# is 0-based internally; exp is ±1 for kappa letters and 0 otherwise.
Letter = tuple[int, int, int]

AP, KA, AM = 0, 1, 2  # raising, kappa, lowering

_KIND_TXT = {AP: "a{}+", KA: "k{}", AM: "a{}-"}


def letter_str(letter: Letter) -> str:
    kind, mode, e = letter
    txt = _KIND_TXT[kind].format(mode + 1)
    if kind == KA and e == -1:
        txt += "^-1"
    return txt


def _rank(letter: Letter) -> tuple[int, int]:
    """Position of a letter in the canonical word order.

    Plus letters ascend by mode, kappas sit in the middle, minus letters
    descend by mode; inversions against this order strictly drop under
    every rewrite (with word length as the tiebreaker), which is the
    termination measure.
    """
    kind, mode, _ = letter
    if kind == AM:
        return (2, -mode)
    return (kind, mode)


def _inversions(word: Sequence[Letter]) -> int:
    count = 0
    ranks = [_rank(x) for x in word]
    for a in range(len(ranks)):
        for b in range(a + 1, len(ranks)):
            if ranks[a] > ranks[b]:
                count += 1
    return count


# ----------------------------------------------------------------- rules


@dataclass(frozen=True)
class Rules:
    """Tunable structure constants of the rewrite system.

    `s1_kappa` is the kappa^{∓1} coefficient c of the mixed-mode exchange
    rule; `s2_scale` is c/(q-q^-1), the scale of the contraction identity.
    The defaults are the W_q(n) values; `corrupted()` returns a coherent
    perturbation used as a negative-control hook by the verifier (every
    oscillator relation must then fail).
    """

    s1_kappa: QFrac = C_WEYL
    s2_scale: QFrac = C_WEYL * INV_QMQI

    def is_default(self) -> bool:
        return self == DEFAULT_RULES

    @classmethod
    def corrupted(cls) -> "Rules":
        return cls(s1_kappa=C_WEYL + QFrac.one(), s2_scale=C_WEYL * INV_QMQI)


DEFAULT_RULES = Rules()

# a rewrite branch: (s-exponent delta, c-exponent delta, replacement word,
# needs_s1_kappa flag) -- the flag marks the branch whose coefficient is the
# rule constant c, so corrupted rule sets can substitute their own value.
_Branch = tuple[int, int, tuple[Letter, ...], bool]


def _rule(x: Letter, y: Letter) -> list[_Branch] | None:
    """Rewrite for the adjacent pair x y, or None if it is in order."""
    kx, ix, ex = x
    ky, iy, ey = y
    if kx == AM and ky == AP:
        if ix == iy:
            # a- a+ -> q a+ a- + c kappa^-1
            return [(2, 0, (y, x), False), (0, 1, ((KA, ix, -1),), True)]
        if ix < iy:
            return [(-2, 0, (y, x), False)]
        return [(2, 0, (y, x), False)]
    if kx == AP and ky == AP and ix > iy:
        return [(-2, 0, (y, x), False)]
    if kx == AM and ky == AM and ix < iy:
        return [(2, 0, (y, x), False)]
    if kx == KA and ky == AP:
        return [(2 * ex if ix == iy else 0, 0, (y, x), False)]
    if kx == AM and ky == KA:
        return [(2 * ey if ix == iy else 0, 0, (y, x), False)]
    if kx == KA and ky == KA:
        if ix == iy and ex != ey:
            return [(0, 0, (), False)]
        if ix > iy:
            return [(0, 0, (y, x), False)]
    return None


def _lazy_coeff(s_exp: int, c_exp: int, over: QFrac | None) -> QFrac:
    out = QFrac(QCoeff.s_pow(s_exp, 2 ** c_exp), c_exp, 0)
    if over is not None:
        out = out * over
    return out


# ------------------------------------------------------------- monomials


class WeylMonomial(NamedTuple):
    """Normal-ordered monomial (plus powers, kappa exponents, minus powers)."""

    plus: tuple[int, ...]
    kappa: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.plus)

    @classmethod
    def identity(cls, n: int) -> "WeylMonomial":
        z = (0,) * n
        return cls(z, z, z)

    def is_canonical(self) -> bool:
        return all(p == 0 or d == 0 for p, d in zip(self.plus, self.minus))

    def word(self) -> tuple[Letter, ...]:
        out: list[Letter] = []
        for i, p in enumerate(self.plus):
            out.extend([(AP, i, 0)] * p)
        for i, z in enumerate(self.kappa):
            if z:
                out.extend([(KA, i, 1 if z > 0 else -1)] * abs(z))
        for i in range(self.n - 1, -1, -1):
            out.extend([(AM, i, 0)] * self.minus[i])
        return tuple(out)

    def dagger(self) -> "WeylMonomial":
        # reversing the word and starring each letter lands directly on the
        # canonical order, so no exchange factors appear
        return WeylMonomial(self.minus, tuple(-z for z in self.kappa), self.plus)

    def __str__(self) -> str:
        parts: list[str] = []
        for i, p in enumerate(self.plus):
            parts.extend([f"a{i + 1}+"] * p)
        for i, z in enumerate(self.kappa):
            if z == 1:
                parts.append(f"k{i + 1}")
            elif z:
                parts.append(f"k{i + 1}^{z}")
        for i in range(self.n - 1, -1, -1):
            parts.extend([f"a{i + 1}-"] * self.minus[i])
        return " ".join(parts) if parts else "1"


def _tweak(t: tuple[int, ...], i: int, delta: int) -> tuple[int, ...]:
    return t[:i] + (t[i] + delta,) + t[i + 1:]


def _append_kappa(m: WeylMonomial, j: int, e: int) -> tuple[int, WeylMonomial]:
    # kappa_j^e passes the whole minus block: q^{e*d_j}
    return 2 * e * m.minus[j], WeylMonomial(m.plus, _tweak(m.kappa, j, e), m.minus)


def _append_plus(m: WeylMonomial, j: int, rules: Rules) -> list[tuple[QFrac, WeylMonomial]]:
    dj = m.minus[j]
    if dj == 0:
        s_exp = 2 * (sum(m.minus[j + 1:]) - sum(m.minus[:j])
                     + m.kappa[j] - sum(m.plus[j + 1:]))
        return [(QFrac(QCoeff.s_pow(s_exp)),
                 WeylMonomial(_tweak(m.plus, j, 1), m.kappa, m.minus))]
    # the appended a_j^+ dissolves against (a_j^-)^{d_j}:
    #   (a-)^d a+ = q^d * s2 * (kappa - ...) (a-)^{d-1} + c [d] kappa^-1 (a-)^{d-1}
    pre = QFrac(QCoeff.s_pow(-2 * sum(m.minus[:j])))
    qd = QFrac(QCoeff.s_pow(2 * dj))
    up = pre * qd * rules.s2_scale
    down = pre * (rules.s1_kappa * QFrac(q_int(dj)) - qd * rules.s2_scale)
    out = []
    if not up.is_zero():
        out.append((up, WeylMonomial(m.plus, _tweak(m.kappa, j, 1), _tweak(m.minus, j, -1))))
    if not down.is_zero():
        out.append((down, WeylMonomial(m.plus, _tweak(m.kappa, j, -1), _tweak(m.minus, j, -1))))
    return out


def _append_minus(m: WeylMonomial, j: int, rules: Rules) -> list[tuple[QFrac, WeylMonomial]]:
    if m.minus[j] > 0 or m.plus[j] == 0:
        # joins its own group after crossing the lower-mode minus letters
        s_exp = 2 * sum(m.minus[:j])
        return [(QFrac(QCoeff.s_pow(s_exp)),
                 WeylMonomial(m.plus, m.kappa, _tweak(m.minus, j, 1)))]
    # crosses everything and contracts against the last a_j^+
    s_exp = 2 * (sum(m.minus[:j]) - sum(m.minus[j + 1:])
                 - m.kappa[j] + sum(m.plus[j + 1:]))
    coeff = QFrac(QCoeff.s_pow(s_exp)) * rules.s2_scale
    p2 = _tweak(m.plus, j, -1)
    return [(coeff, WeylMonomial(p2, _tweak(m.kappa, j, 1), m.minus)),
            (-coeff, WeylMonomial(p2, _tweak(m.kappa, j, -1), m.minus))]


def _append_letter(m: WeylMonomial, letter: Letter,
                   rules: Rules) -> list[tuple[QFrac, WeylMonomial]]:
    kind, j, e = letter
    if kind == KA:
        s_exp, m2 = _append_kappa(m, j, e)
        return [(QFrac(QCoeff.s_pow(s_exp)), m2)]
    if kind == AP:
        return _append_plus(m, j, rules)
    return _append_minus(m, j, rules)


# -------------------------------------------------------------- elements


class WeylElement:
    """A finite QFrac-linear combination of Weyl monomials."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[WeylMonomial, QFrac] | None = None) -> None:
        self.n = n
        self._terms: dict[WeylMonomial, QFrac] = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    self._terms[m] = c

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "WeylElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "WeylElement":
        return cls(n, {WeylMonomial.identity(n): QFrac.one()})

    @classmethod
    def from_monomial(cls, m: WeylMonomial, coeff: QFrac | int = 1) -> "WeylElement":
        cc = QFrac._coerce(coeff)
        if cc is None:
            raise TypeError(f"bad coefficient type {type(coeff).__name__}")
        return cls(m.n, {m: cc})

    @classmethod
    def from_word(cls, n: int, word: Iterable[Letter],
                  rules: Rules = DEFAULT_RULES) -> "WeylElement":
        """Canonical element of a product of letters (append calculus)."""
        cur: dict[WeylMonomial, QFrac] = {WeylMonomial.identity(n): QFrac.one()}
        for letter in word:
            nxt: dict[WeylMonomial, QFrac] = {}
            for m, c in cur.items():
                for c2, m2 in _append_letter(m, letter, rules):
                    acc = nxt.get(m2)
                    s = c * c2 if acc is None else acc + c * c2
                    if s.is_zero():
                        nxt.pop(m2, None)
                    else:
                        nxt[m2] = s
            cur = nxt
        return cls(n, cur)

    # -- container ------------------------------------------------------

    def terms(self) -> list[tuple[WeylMonomial, QFrac]]:
        return sorted(self._terms.items(), key=lambda t: t[0])

    def coeff(self, m: WeylMonomial) -> QFrac:
        return self._terms.get(m, QFrac.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylElement):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.n, frozenset(self._terms.items())))

    # -- linear structure -------------------------------------------------

    def _check(self, other: "WeylElement") -> None:
        if self.n != other.n:
            raise ValueError(f"mode count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: object) -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        t = dict(self._terms)
        for m, c in other._terms.items():
            s = t.get(m, QFrac.zero()) + c
            if s.is_zero():
                t.pop(m, None)
            else:
                t[m] = s
        return WeylElement(self.n, t)

    def __sub__(self, other: object) -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.n, {m: -c for m, c in self._terms.items()})

    def scale(self, c: QFrac | QCoeff | int) -> "WeylElement":
        cc = QFrac._coerce(c)
        if cc is None:
            raise TypeError(f"cannot scale by {type(c).__name__}")
        return WeylElement(self.n, {m: v * cc for m, v in self._terms.items()})

    def __rmul__(self, other: object) -> "WeylElement":
        cc = QFrac._coerce(other)
        if cc is None:
            return NotImplemented
        return self.scale(cc)

    def __mul__(self, other: object) -> "WeylElement":
        if isinstance(other, WeylElement):
            return mul(self, other)
        cc = QFrac._coerce(other)
        if cc is None:
            return NotImplemented
        return self.scale(cc)

    # -- involution ---------------------------------------------------------

    def dagger(self) -> "WeylElement":
        """Anti-involution with (a^-)^dagger = a^+, kappa^dagger = kappa^-1,
        and the bar involution on coefficients."""
        return WeylElement(
            self.n, {m.dagger(): c.conjugate() for m, c in self._terms.items()})

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"plus": list(m.plus), "kappa": list(m.kappa),
                 "minus": list(m.minus), "coeff": c.to_json()}
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeylElement":
        n = int(data["n"])
        t: dict[WeylMonomial, QFrac] = {}
        for row in data["terms"]:
            m = WeylMonomial(tuple(row["plus"]), tuple(row["kappa"]),
                             tuple(row["minus"]))
            t[m] = QFrac.from_json(row["coeff"])
        return cls(n, t)

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            mtxt = str(m)
            ctxt = str(c)
            if mtxt == "1":
                parts.append(ctxt if ctxt != "1" else "1")
            elif ctxt == "1":
                parts.append(mtxt)
            else:
                parts.append(f"({ctxt}) {mtxt}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"WeylElement({self})"


# ------------------------------------------------------------ generators


def a_plus(n: int, i: int) -> WeylElement:
    """The raising generator a_i^+ (1-based mode index)."""
    _check_mode(n, i)
    m = WeylMonomial.identity(n)
    return WeylElement.from_monomial(m._replace(plus=_tweak(m.plus, i - 1, 1)))


def a_minus(n: int, i: int) -> WeylElement:
    """The lowering generator a_i^- (1-based mode index)."""
    _check_mode(n, i)
    m = WeylMonomial.identity(n)
    return WeylElement.from_monomial(m._replace(minus=_tweak(m.minus, i - 1, 1)))


def kappa_el(n: int, i: int, e: int = 1) -> WeylElement:
    """kappa_i^e (1-based mode index)."""
    _check_mode(n, i)
    m = WeylMonomial.identity(n)
    return WeylElement.from_monomial(m._replace(kappa=_tweak(m.kappa, i - 1, e)))


def _check_mode(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"mode index {i} out of range 1..{n}")


def mul(x: WeylElement, y: WeylElement, rules: Rules = DEFAULT_RULES) -> WeylElement:
    """Canonical product, via the closed-form append calculus."""
    x._check(y)
    out: dict[WeylMonomial, QFrac] = {}
    for my, cy in y._terms.items():
        wy = my.word()
        for mx, cx in x._terms.items():
            c0 = cx * cy
            cur: dict[WeylMonomial, QFrac] = {mx: c0}
            for letter in wy:
                nxt: dict[WeylMonomial, QFrac] = {}
                for m, c in cur.items():
                    for c2, m2 in _append_letter(m, letter, rules):
                        acc = nxt.get(m2)
                        s = c * c2 if acc is None else acc + c * c2
                        if s.is_zero():
                            nxt.pop(m2, None)
                        else:
                            nxt[m2] = s
                cur = nxt
            for m, c in cur.items():
                acc = out.get(m)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
    return WeylElement(x.n, out)


def commutator(x: WeylElement, y: WeylElement, s_exp: int = 0,
               sign: int = -1, rules: Rules = DEFAULT_RULES) -> WeylElement:
    """[x, y]_{s^e} = x y + sign * s^e * y x (sign=-1 commutator-like,
    sign=+1 anticommutator-like)."""
    xy = mul(x, y, rules)
    yx = mul(y, x, rules)
    w = yx.scale(QFrac(QCoeff.s_pow(s_exp))) if s_exp else yx
    return xy + w if sign > 0 else xy - w


# --------------------------------------------------------------- engine


class _MeasureError(AssertionError):
    pass


@lru_cache(maxsize=None)
def _dplus_pow(j: int) -> QCoeff:
    return DPLUS ** j


def _reduce_word(word: tuple[Letter, ...], n: int, strategy: str, rules: Rules,
                 check_measure: bool) -> dict[WeylMonomial, QFrac]:
    """Rewrite `word` to pre-normal form with the local exchange rules only.

    Coefficients along a reduction path are always of the form q^a c^b with
    c = 2/(s+s^-1), so they are tracked as integer exponent pairs and only
    assembled into QFrac values once per collected monomial.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    use_default = rules.s1_kappa == DEFAULT_RULES.s1_kappa
    left = strategy == "leftmost"
    lazy: dict[WeylMonomial, dict[tuple[int, int], int]] = {}
    extra: dict[WeylMonomial, QFrac] = {}
    # stack entries: (s exponent, c exponent, override coeff, word, scan hint)
    stack = [(0, 0, None, word, 0 if left else len(word) - 2)]
    while stack:
        s_exp, c_exp, over, w, hint = stack.pop()
        last = len(w) - 2
        hit = None
        if left:
            t = hint if hint > 0 else 0
            while t <= last:
                br = _rule(w[t], w[t + 1])
                if br is not None:
                    hit = (t, br)
                    break
                t += 1
        else:
            t = hint if hint < last else last
            while t >= 0:
                br = _rule(w[t], w[t + 1])
                if br is not None:
                    hit = (t, br)
                    break
                t -= 1
        if hit is None:
            m = _collect_prenormal(w, n)
            if over is None:
                d = lazy.setdefault(m, {})
                key = (s_exp, c_exp)
                d[key] = d.get(key, 0) + 1
            else:
                c = _lazy_coeff(s_exp, c_exp, over)
                acc = extra.get(m)
                extra[m] = c if acc is None else acc + c
            continue
        t, branches = hit
        if check_measure:
            before = (_inversions(w), len(w))
        for ds, dc, repl, s1flag in branches:
            w2 = w[:t] + repl + w[t + 2:]
            if check_measure:
                after = (_inversions(w2), len(w2))
                if not after < before:
                    raise _MeasureError(
                        f"measure did not drop: {before} -> {after} at {w}")
            # locality: only the boundary pairs around the rewrite site can
            # become new redexes, so the scan resumes there
            nh = t - 1 if left else t + len(repl) - 1
            if s1flag and not use_default:
                stack.append((s_exp + ds, c_exp,
                              (over or QFrac.one()) * rules.s1_kappa, w2, nh))
            else:
                stack.append((s_exp + ds, c_exp + dc, over, w2, nh))
    out: dict[WeylMonomial, QFrac] = {}
    for m, d in lazy.items():
        cmax = max(ce for (_, ce) in d)
        num = QCoeff.zero()
        for (se, ce), count in d.items():
            num = num + QCoeff.s_pow(se, count * (2 ** ce)) * _dplus_pow(cmax - ce)
        out[m] = QFrac(num, cmax, 0)
    for m, c in extra.items():
        acc = out.get(m)
        s = c if acc is None else acc + c
        if s.is_zero():
            out.pop(m, None)
        else:
            out[m] = s
    return out


@lru_cache(maxsize=65536)
def _contract_monomial(m: WeylMonomial,
                       rules: Rules) -> tuple[tuple[WeylMonomial, QFrac], ...]:
    el = WeylElement.from_word(m.n, m.word(), rules)
    return tuple(el._terms.items())


def _collect_prenormal(word: tuple[Letter, ...], n: int) -> WeylMonomial:
    plus = [0] * n
    kappa = [0] * n
    minus = [0] * n
    for kind, i, e in word:
        if kind == AP:
            plus[i] += 1
        elif kind == KA:
            kappa[i] += e
        else:
            minus[i] += 1
    return WeylMonomial(tuple(plus), tuple(kappa), tuple(minus))


WordLike = Union[str, Sequence[Letter], WeylElement]


def normal_order(word: WordLike, n: int | None = None, *,
                 strategy: str = "leftmost", rules: Rules = DEFAULT_RULES,
                 contract: bool = True, check_measure: bool = False) -> WeylElement:
    """Normal-order a word (or re-normalize an element).

    With contract=False the result is the pre-normal form produced by the
    local exchange rules alone (a_i^+ a_i^- left untouched); the default
    applies the contraction identity afterwards, landing in the canonical
    min(p_i, d_i) = 0 basis used by `mul`.
    """
    if isinstance(word, WeylElement):
        items = [(c, m.word()) for m, c in word._terms.items()]
        n = word.n
    else:
        if isinstance(word, str):
            letters, n_seen = parse_word(word, n)
        else:
            letters = list(word)
            n_seen = 1 + max((l[1] for l in letters), default=-1)
            if n is not None and n_seen > n:
                raise ValueError(f"letter mode exceeds n={n}")
        n = max(n_seen, 1) if n is None else n
        items = [(QFrac.one(), tuple(letters))]
    acc: dict[WeylMonomial, QFrac] = {}
    for c0, w in items:
        pre = _reduce_word(w, n, strategy, rules, check_measure)
        for m, c in pre.items():
            # pre-normal monomials may straddle the contraction identity;
            # replaying their word through the append calculus contracts them
            if contract and not m.is_canonical():
                cc = c * c0
                for m2, c2 in _contract_monomial(m, rules):
                    s = acc.get(m2, QFrac.zero()) + c2 * cc
                    if s.is_zero():
                        acc.pop(m2, None)
                    else:
                        acc[m2] = s
            else:
                s = acc.get(m, QFrac.zero()) + c * c0
                if s.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = s
    return WeylElement(n, acc)


# ---------------------------------------------------------------- parser


class WordParseError(ValueError):
    """Raised for malformed generator words; carries the token position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at character {position})")
        self.position = position


_TOKEN_RE = re.compile(r"a(\d+)([+-])|k(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, n: int | None = None) -> tuple[list[Letter], int]:
    """Parse a generator word like "a1+ a2- k1^-1 k2" into letters.

    Tokens are separated by whitespace or '*'.  Returns (letters, n) with n
    the given mode count or the largest mode mentioned.  Raises
    WordParseError (with character position) on malformed tokens or
    out-of-range modes.
    """
    letters: list[Letter] = []
    max_mode = 0
    pos = 0
    for raw in re.split(r"([\s*]+)", text):
        if not raw or not raw.strip(" \t\r\n*"):
            pos += len(raw)
            continue
        tok = raw
        m = _TOKEN_RE.fullmatch(tok)
        if m is None:
            raise WordParseError(f"unrecognized token {tok!r}", pos)
        if m.group(1) is not None:
            mode = int(m.group(1))
            kind = AP if m.group(2) == "+" else AM
            exp = 1
        else:
            mode = int(m.group(3))
            kind = KA
            exp = int(m.group(4)) if m.group(4) is not None else 1
        if mode < 1:
            raise WordParseError(f"mode index must be >= 1 in {tok!r}", pos)
        if n is not None and mode > n:
            raise WordParseError(
                f"mode index {mode} exceeds n={n} in {tok!r}", pos)
        max_mode = max(max_mode, mode)
        if kind == KA:
            sgn = 1 if exp > 0 else -1
            letters.extend([(KA, mode - 1, sgn)] * abs(exp))
        else:
            letters.append((kind, mode - 1, 0))
        pos += len(raw)
    return letters, (n if n is not None else max(max_mode, 1))


# ------------------------------------------------------------ Fock space


class FockVector:
    """Element of the symbolic Fock module: QFrac combination of |m> states."""

    __slots__ = ("n", "_amp")

    def __init__(self, n: int, amp: dict[tuple[int, ...], QFrac] | None = None) -> None:
        self.n = n
        self._amp: dict[tuple[int, ...], QFrac] = {}
        if amp:
            for m, c in amp.items():
                if not c.is_zero():
                    self._amp[tuple(m)] = c

    @classmethod
    def vacuum(cls, n: int) -> "FockVector":
        return cls(n, {(0,) * n: QFrac.one()})

    @classmethod
    def basis(cls, n: int, m: Sequence[int]) -> "FockVector":
        m = tuple(m)
        if len(m) != n or any(x < 0 for x in m):
            raise ValueError(f"bad occupation tuple {m} for n={n}")
        return cls(n, {m: QFrac.one()})

    def amplitudes(self) -> list[tuple[tuple[int, ...], QFrac]]:
        return sorted(self._amp.items())

    def amplitude(self, m: Sequence[int]) -> QFrac:
        return self._amp.get(tuple(m), QFrac.zero())

    def is_zero(self) -> bool:
        return not self._amp

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FockVector):
            return self.n == other.n and self._amp == other._amp
        return NotImplemented

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.n != other.n:
            raise ValueError("mode count mismatch")
        t = dict(self._amp)
        for m, c in other._amp.items():
            s = t.get(m, QFrac.zero()) + c
            if s.is_zero():
                t.pop(m, None)
            else:
                t[m] = s
        return FockVector(self.n, t)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, c: QFrac | int) -> "FockVector":
        cc = QFrac._coerce(c)
        if cc is None:
            raise TypeError(f"bad coefficient type {type(c).__name__}")
        return FockVector(self.n, {m: v * cc for m, v in self._amp.items()})

    def __str__(self) -> str:
        if not self._amp:
            return "0"
        return " + ".join(f"({c}) |{','.join(map(str, m))}>"
                          for m, c in self.amplitudes())

    __repr__ = __str__


def _apply_letter_fock(letter: Letter, v: FockVector, k: int | None) -> FockVector:
    kind, j, e = letter
    out: dict[tuple[int, ...], QFrac] = {}
    for m, c in v._amp.items():
        if kind == AP:
            if k is not None and m[j] >= k - 1:
                continue  # truncated: raising out of the top level kills the state
            coeff = QFrac(QCoeff.s_pow(-2 * sum(m[:j])))
            m2 = m[:j] + (m[j] + 1,) + m[j + 1:]
        elif kind == AM:
            if m[j] == 0:
                continue
            coeff = QFrac(QCoeff.s_pow(2 * sum(m[:j]))) * C_WEYL * QFrac(q_int(m[j]))
            m2 = m[:j] + (m[j] - 1,) + m[j + 1:]
        else:
            coeff = QFrac(QCoeff.s_pow(2 * e * m[j]))
            m2 = m
        s = out.get(m2, QFrac.zero()) + c * coeff
        if s.is_zero():
            out.pop(m2, None)
        else:
            out[m2] = s
    return FockVector(v.n, out)


def apply_fock(x: WordLike, v: FockVector, k: int | None = None) -> FockVector:
    """Apply an element (or word) to a symbolic Fock vector.

    The action is the defining one: a_j^+ shifts m_j up with factor
    q^{-(m_1+..+m_{j-1})}, a_j^- shifts down with factor
    q^{+(m_1+..+m_{j-1})} c [m_j], kappa_j scales by q^{m_j}.  With k given,
    the module is truncated at occupation k-1 per mode (the root-of-unity
    Fock module): raising out of the top level gives zero.
    """
    if isinstance(x, WeylElement):
        if x.n != v.n:
            raise ValueError("mode count mismatch")
        out = FockVector(v.n)
        for m, c in x._terms.items():
            w = v
            for letter in reversed(m.word()):
                w = _apply_letter_fock(letter, w, k)
                if w.is_zero():
                    break
            out = out + w.scale(c)
        return out
    if isinstance(x, str):
        letters, _ = parse_word(x, v.n)
    else:
        letters = list(x)
    w = v
    for letter in reversed(letters):
        w = _apply_letter_fock(letter, w, k)
    return w


def inner(u: FockVector, v: FockVector) -> QFrac:
    """Sesquilinear pairing <u|v> with <m|m> = prod_i beta(m_i).

    beta is `fock_norm_factor`; the left argument's coefficients pass
    through the bar involution (s -> s^-1).
    """
    if u.n != v.n:
        raise ValueError("mode count mismatch")
    out = QFrac.zero()
    for m, cu in u._amp.items():
        cv = v._amp.get(m)
        if cv is None:
            continue
        w = cu.conjugate() * cv
        for mi in m:
            w = w * fock_norm_factor(mi)
        out = out + w
    return out
