"""Theorem-level verification: normality reports, quotient indices for
d in {1, 7}, and the infiniteness certificate for d = 3 via an exact
Euclidean representation of the (2,3,6) triangle group.

A coset-enumeration timeout proves nothing, so infiniteness is certified
by representation: the quotient of PU(2,1,O_3) by the hybrid maps onto
the (2,3,6) triangle group, realized by exact Euclidean motions over O_3,
and a witness word maps to a nonzero translation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactring import QuadInt
from .catalog import get_catalog
from .cxhyp import Mat, proj_eq, projective_order
from .fpgroups import (
    AbelianInvariants, CosetTable, Presentation, abelian_structure,
    abelianization, derived_subgroup_table, parse_word, quotient_by_normal_gens,
    reidemeister_schreier, todd_coxeter,
)


class CertificationError(AssertionError):
    """A paper identity or certificate validation failed."""


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    passed: bool
    witness: str = ""


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, description: str, passed: bool, witness: str = "") -> None:
        self.checks.append(CheckResult(check_id, description, passed, witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def raise_on_failure(self) -> "Report":
        for c in self.checks:
            if not c.passed:
                raise CertificationError(f"{self.title}: {c.check_id} failed: {c.description}")
        return self

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.__dict__ for c in self.checks],
        }

    def as_markdown(self) -> str:
        lines = [f"## {self.title}", ""]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"- [{mark}] {c.check_id}: {c.description}"
                         + (f" ({c.witness})" if c.witness else ""))
        return "\n".join(lines)


# -- Euclidean motions over O_3 -------------------------------------------

@dataclass(frozen=True)
class EuclideanMotion:
    """z -> alpha z + beta with alpha a unit of O_3 and beta in O_3."""

    alpha: QuadInt
    beta: QuadInt

    def __post_init__(self):
        if self.alpha.d != 3 or self.beta.d != 3:
            raise ValueError("Euclidean motions live over O_3")
        if not self.alpha.is_unit():
            raise ValueError(f"alpha = {self.alpha} is not a unit of O_3")

    @staticmethod
    def identity() -> "EuclideanMotion":
        return EuclideanMotion(QuadInt.one(3), QuadInt.zero(3))

    def compose(self, other: "EuclideanMotion") -> "EuclideanMotion":
        # (a1,b1) o (a2,b2): z -> a1(a2 z + b2) + b1
        return EuclideanMotion(self.alpha * other.alpha,
                               self.alpha * other.beta + self.beta)

    __mul__ = compose

    def inverse(self) -> "EuclideanMotion":
        # alpha^-1 = conj(alpha) since norm(alpha) = 1
        ainv = self.alpha.conj()
        return EuclideanMotion(ainv, -(ainv * self.beta))

    def is_identity(self) -> bool:
        return self.alpha == QuadInt.one(3) and self.beta.is_zero()

    def order(self) -> int | None:
        """Exact order; None means infinite."""
        if self.alpha == QuadInt.one(3):
            return None if not self.beta.is_zero() else 1
        # alpha is a root of unity of order <= 6; the motion is a rotation
        power = self
        for k in range(1, 7):
            if power.is_identity():
                return k
            power = power * self
        return None  # alpha != 1 always has finite order; unreachable

    def is_nontrivial_translation(self) -> bool:
        return self.alpha == QuadInt.one(3) and not self.beta.is_zero()

    def __str__(self) -> str:
        return f"z -> ({self.alpha})*z + ({self.beta})"


def evaluate_motion_word(word, images: dict[int, EuclideanMotion]) -> EuclideanMotion:
    m = EuclideanMotion.identity()
    for g in word:
        img = images[abs(g)]
        m = m * (img if g > 0 else img.inverse())
    return m


# -- the (2,3,6) infiniteness certificate ---------------------------------

# G = PU(2,1,O_3)/H~(3) after the generator change a = P Q^-1, b = Q, c = R
G_ABC = Presentation(
    3,
    tuple(parse_word(t, ("a", "b", "c")) for t in
          ("c^2", "a^6", "a c a^-1 c^-1", "(a b)^3", "(c a b)^3", "b^2")),
    ("a", "b", "c"),
    name="quotient-d3-abc")

# mutually inverse substitutions between the (P,Q,R) and (a,b,c) generators
SUBST_ABC_TO_PQR = {"a": "P Q^-1", "b": "Q", "c": "R"}
SUBST_PQR_TO_ABC = {"P": "a b", "Q": "b", "R": "c"}


@dataclass(frozen=True)
class InfinitenessCertificate:
    presentation: Presentation            # G on generators a, b, c
    kill_list: tuple[str, ...]            # generators sent to the identity
    images: dict[str, EuclideanMotion]    # surviving generator images
    witness_word: str
    witness_image: EuclideanMotion
    relator_images: tuple[EuclideanMotion, ...]

    def validate(self) -> None:
        """Re-derive every relator image independently of the stored ones."""
        names = self.presentation.names()
        idx_images = {}
        for i, n in enumerate(names, start=1):
            idx_images[i] = (EuclideanMotion.identity() if n in self.kill_list
                             else self.images[n])
        for k, rel in enumerate(self.presentation.relators):
            img = evaluate_motion_word(rel, idx_images)
            if not img.is_identity():
                raise CertificationError(
                    f"relator #{k} does not map to the identity motion ({img})")
            if img.alpha != self.relator_images[k].alpha or img.beta != self.relator_images[k].beta:
                raise CertificationError("stored relator image disagrees with re-derivation")
        w = parse_word(self.witness_word, names)
        img = evaluate_motion_word(w, idx_images)
        if not img.is_nontrivial_translation():
            raise CertificationError(f"witness image {img} is not a nonzero translation")
        if img != self.witness_image:
            raise CertificationError("stored witness image disagrees with re-derivation")


def triangle_236_certificate() -> InfinitenessCertificate:
    """Kill c in G and represent the quotient as Euclidean motions:
    a -> rotation by a primitive 6th root of unity about 0, b -> half-turn
    about 1. All surviving relators map to the identity; the witness
    a^3 b maps to the translation z -> z - 1."""
    zeta6 = QuadInt(3, 1, 1)            # 1 + w, a primitive 6th root of unity
    images = {
        "a": EuclideanMotion(zeta6, QuadInt.zero(3)),
        "b": EuclideanMotion(QuadInt(3, -1, 0), QuadInt(3, 1, 0)),
    }
    idx_images = {1: images["a"], 2: images["b"], 3: EuclideanMotion.identity()}
    relator_images = tuple(
        evaluate_motion_word(rel, idx_images) for rel in G_ABC.relators)
    witness = "a^3 b"
    witness_image = evaluate_motion_word(parse_word(witness, G_ABC.names()), idx_images)
    cert = InfinitenessCertificate(
        presentation=G_ABC,
        kill_list=("c",),
        images=images,
        witness_word=witness,
        witness_image=witness_image,
        relator_images=relator_images,
    )
    cert.validate()
    return cert


def verify_tietze_substitution() -> Report:
    """The paper's generator change a = P Q^-1, b = Q, c = R is checked in
    two finite steps: the substitutions are mutually inverse on free
    generators, and the (P,Q,R)-relators of the quotient presentation all
    die in the Euclidean representation composed with the substitution."""
    report = Report("tietze-substitution d=3")
    cat = get_catalog(3)

    abc_names = ("a", "b", "c")
    pqr_names = cat.presentation.names()
    for name in pqr_names:
        w = parse_word(SUBST_PQR_TO_ABC[name], abc_names)
        back = []
        for g in w:
            sub = parse_word(SUBST_ABC_TO_PQR[abc_names[abs(g) - 1]], pqr_names)
            back.extend(sub if g > 0 else tuple(-x for x in reversed(sub)))
        from .fpgroups import free_reduce
        ok = free_reduce(back) == parse_word(name, pqr_names)
        report.add("substitution-inverse", f"{name} round-trips through (a,b,c)", ok)

    cert = triangle_236_certificate()
    idx_abc = {1: cert.images["a"], 2: cert.images["b"], 3: EuclideanMotion.identity()}
    quotient = cat.quotient_presentation()
    for k, rel in enumerate(quotient.relators):
        # push the relator through P -> ab, Q -> b, R -> c, then to motions
        mapped: list[int] = []
        for g in rel:
            sub = parse_word(SUBST_PQR_TO_ABC[pqr_names[abs(g) - 1]], abc_names)
            mapped.extend(sub if g > 0 else tuple(-x for x in reversed(sub)))
        img = evaluate_motion_word(mapped, idx_abc)
        report.add("relator-dies", f"quotient relator #{k} maps to the identity motion",
                   img.is_identity(), witness=str(img) if not img.is_identity() else "")
    return report.raise_on_failure()


# -- normality -------------------------------------------------------------

def verify_normality(d: int) -> Report:
    """Check every paper-supplied conjugation identity exactly."""
    cat = get_catalog(d)
    report = Report(f"normality d={d}")
    for ident in cat.conjugation_identities:
        lhs = cat.eval_word(ident.lhs)
        rhs = cat.eval_word(ident.rhs)
        report.add(ident.lemma, f"{ident.lhs} = {ident.rhs}", proj_eq(lhs, rhs))
    return report.raise_on_failure()


def verify_word_identities(d: int) -> Report:
    cat = get_catalog(d)
    report = Report(f"word identities d={d}")
    for wi in cat.word_identities:
        lhs = cat.eval_word(wi.word, dict(cat.picard))
        rhs = cat.env()[wi.target]
        desc = f"{wi.target} = {wi.word}" + (f" [{wi.note}]" if wi.note else "")
        report.add(wi.lemma, desc, proj_eq(lhs, rhs))
    return report.raise_on_failure()


def lemma31_index_bound() -> Report:
    """The two matrix identities bounding [H(3) : H~(3)] by 4."""
    from .catalog import embed
    cat = get_catalog(3)
    report = Report("index bound [H(3):H~(3)] | 4")
    e2, u2 = cat.fuchsian["E"], cat.fuchsian["U"]
    minus_id = Mat.from_entries(3, ((-1, 0), (0, -1)))
    eue_inv = (e2 * u2 * e2).inverse()
    for j in (1, 2):
        other = 3 - j
        lhs = embed(j, minus_id) * embed(other, u2) * embed(j, minus_id)
        rhs = embed(other, eue_inv)
        report.add("lemma-3.1", f"iota_{j}(-Id) iota_{other}(U) iota_{j}(-Id)"
                                f" = iota_{other}((EUE)^-1)", lhs == rhs)
    a = embed(1, e2) * embed(2, minus_id)
    b = embed(2, minus_id) * embed(1, e2)
    report.add("lemma-3.1", "diagonal blocks commute", a == b)
    return report.raise_on_failure()


# -- indices ---------------------------------------------------------------

@dataclass(frozen=True)
class IndexResult:
    d: int
    outcome: str                              # "finite" | "infinite"
    index: int | None = None
    table: CosetTable | None = None
    certificate: InfinitenessCertificate | None = None
    provenance: tuple[str, ...] = ()


# the d=3 quotient is infinite; a small cap makes overflow (the designed
# signal to route into certification) fast
D3_OVERFLOW_CAP = 20000


def index_report(d: int, max_cosets: int = 10**6) -> IndexResult:
    verify_word_identities(d)
    verify_normality(d)
    cat = get_catalog(d)
    provenance = tuple({1: ("lemma-4.3", "lemma-4.4", "theorem-4.5"),
                        3: ("lemma-3.2", "lemma-3.3", "lemma-3.1", "theorem-3.4"),
                        7: ("lemma-5.3", "lemma-5.4", "theorem-5.5")}[d])
    quotient = cat.quotient_presentation()
    if d == 3:
        table = todd_coxeter(quotient, max_cosets=min(max_cosets, D3_OVERFLOW_CAP))
        if table.complete:
            raise CertificationError(
                "d=3 quotient enumeration completed; expected overflow")
        cert = triangle_236_certificate()
        verify_tietze_substitution()
        lemma31_index_bound()
        return IndexResult(3, "infinite", certificate=cert, provenance=provenance)
    table = todd_coxeter(quotient, max_cosets=max_cosets)
    if not table.complete:
        raise CertificationError(f"d={d} quotient enumeration overflowed unexpectedly")
    expected = {1: 2, 7: 1}[d]
    if table.index != expected:
        raise CertificationError(
            f"d={d} quotient has index {table.index}, expected {expected}")
    return IndexResult(d, "finite", index=table.index, table=table,
                       provenance=provenance)


PRIMED_D3_WORDS = ("P^2 (R Q^2) P^-2", "Q^2", "R Q^2 R")


def primed_d3_closure() -> Report:
    """Corrected reading of the d=3 primed normal closure: the H'(3)
    generator words all die in Gamma(3)^ab, so the normal closure of
    H'(3) stays inside the commutator subgroup and the quotient of
    Gamma(3) by it surjects onto Z/6 -- it is not the trivial group."""
    cat = get_catalog(3)
    report = Report("primed hybrid d=3")
    report.add("section-3-closing", "(E1')^2 = E1",
               proj_eq(cat.eval_word("E1p E1p", cat.env()), cat.env()["E1"]))
    struct = abelian_structure(cat.presentation)
    for text in PRIMED_D3_WORDS:
        img = struct.image(cat.picard_word(text))
        report.add("section-3-closing",
                   f"H'(3) generator {text} dies in Gamma(3)^ab",
                   all(x == 0 for x in img))
    pres = quotient_by_normal_gens(
        cat.presentation, tuple(cat.picard_word(t) for t in PRIMED_D3_WORDS))
    ab = abelianization(pres)
    report.add("section-3-closing",
               "Gamma(3)/<<H'(3)>> abelianizes to Z/6, hence is nontrivial "
               "and <<H'(3)>> lies inside [Gamma(3),Gamma(3)] "
               "(corrected reading: the closing claim of a trivial quotient "
               "is inconsistent with the containment in the commutator "
               "subgroup)",
               ab == AbelianInvariants(0, (6,)))
    return report.raise_on_failure()


# word over (I0, Q, T) for the order-4 element R1 = iota_1(R) of H'(1),
# found by bounded bidirectional search and verified projectively by
# verify_primed_d1_word
PRIMED_D1_WORD = "T^-1 I0 T^-1 Q I0 Q"


def verify_primed_d1_word() -> bool:
    cat = get_catalog(1)
    r1 = cat.hybrid_primed["R1"]
    return proj_eq(cat.eval_word(PRIMED_D1_WORD, dict(cat.picard)), r1)


def primed_d1_equality(max_cosets: int = 10**6) -> Report:
    """Corrected reading of the d=1 primed hybrid: the order-4 elements
    R1 = iota_1(R), R2 = iota_2(R) satisfy exact scalar identities placing
    them inside H(1), and conversely E1, E2 are words in R1, R2, so
    H'(1) = H(1) and the lattice quotient by H'(1) still has order 2."""
    cat = get_catalog(1)
    env = dict(cat.hybrid)
    env.update(cat.hybrid_primed)
    report = Report("primed hybrid d=1")
    for name in ("R1", "R2"):
        report.add("corollary-4.6", f"{name} has projective order 4",
                   projective_order(env[name], 8) == 4)
    for text in ("E1^2 E2 R1", "E1 E2^2 R2"):
        m = cat.eval_word(text, env)
        report.add("corollary-4.6", f"{text} is a unit scalar (so the "
                   "order-4 element lies in the plain hybrid)",
                   proj_eq(m, Mat.identity(1, 3)))
    for lhs, rhs in (("R2^-1 R1^-2", "E1"), ("R2^-2 R1^-1", "E2")):
        report.add("corollary-4.6", f"{lhs} = {rhs} (so the plain hybrid "
                   "lies in the primed one)",
                   proj_eq(cat.eval_word(lhs, env), env[rhs]))
    report.add("corollary-4.6", "the order-4 word over I0, Q, T is verified",
               verify_primed_d1_word())
    pres = quotient_by_normal_gens(
        cat.quotient_presentation(), (cat.picard_word(PRIMED_D1_WORD),))
    table = todd_coxeter(pres, max_cosets=max_cosets)
    report.add("corollary-4.6", "adjoining the order-4 element leaves a "
               "quotient of order 2, not 1: H'(1) = H(1) (corrected reading)",
               table.complete and table.index == 2)
    return report.raise_on_failure()


# -- abelianizations -------------------------------------------------------

def lemma36_relations() -> Report:
    cat = get_catalog(3)
    report = Report("relations among E1, U1, U2")
    ident = Mat.identity(3, 3)
    for text in ("E1^3", "(U1 U2)^3", "(E1 U1^-1 U2)^3", "(E1 U2 U1^-1)^3",
                 "(E1^-1 U1 U2^-1)^3", "(E1^-1 U2^-1 U1)^3"):
        report.add("lemma-3.6", f"{text} = 1", proj_eq(cat.eval_word(text), ident))
    return report.raise_on_failure()


def partial_hybrid_presentation(primed: bool = False) -> Presentation:
    """<E1 (or E1'), U1, U2> subject to the verified relations; for the
    primed variant E1 = (E1')^2 is substituted."""
    e = "e^2" if primed else "e"
    texts = (f"({e})^3", "(u v)^3", f"({e} u^-1 v)^3", f"({e} v u^-1)^3",
             f"(({e})^-1 u v^-1)^3", f"(({e})^-1 v^-1 u)^3")
    names = ("e", "u", "v")
    return Presentation(3, tuple(parse_word(t, names) for t in texts), names)


def commutator_subgroup_table() -> CosetTable:
    """Coset table of [Gamma(3), Gamma(3)], built from the regular action
    of the (finite) abelianization; index = |Gamma(3)^ab| by construction,
    and the generator commutators are double-checked to stabilize the
    subgroup coset."""
    cat = get_catalog(3)
    pres = cat.presentation
    table = derived_subgroup_table(pres)
    ab = abelianization(pres)
    stabilized = all(
        table.act_word(0, cat.picard_word(t)) == 0
        for t in ("P Q P^-1 Q^-1", "P R P^-1 R^-1", "Q R Q^-1 R^-1",
                  "R", "P^3", "Q^2"))
    if not (table.complete and ab.is_finite and table.index == ab.order
            and stabilized):
        raise CertificationError(
            "commutator-subgroup table did not certify index = |ab|")
    return table


def hybrid_abelianization_bounds() -> Report:
    """Finite-abelianization chain: the hybrid relators force H(3)^ab and
    H'(3)^ab finite; the H'(3) generators die in Gamma(3)^ab; the
    commutator subgroup abelianizes to Z + Z; combined, H'(3) has infinite
    index in [Gamma(3), Gamma(3)] and hence in Gamma(3)."""
    cat = get_catalog(3)
    report = Report("abelianization bounds d=3")
    lemma36_relations()

    ab_plain = abelianization(partial_hybrid_presentation(primed=False))
    report.add("corollary-3.7", f"partial H(3) presentation abelianizes to {ab_plain}",
               ab_plain.is_finite)
    ab_primed = abelianization(partial_hybrid_presentation(primed=True))
    report.add("lemma-3.10", f"partial H'(3) presentation abelianizes to {ab_primed}",
               ab_primed.is_finite)

    struct = abelian_structure(cat.presentation)
    report.add("lemma-3.8", f"Gamma(3)^ab = {struct.invariants}",
               struct.invariants == AbelianInvariants(0, (6,)))
    for text in ("P^2 (R Q^2) P^-2", "Q^2", "R Q^2 R"):
        img = struct.image(cat.picard_word(text))
        report.add("lemma-3.8", f"H'(3) generator {text} dies in Gamma(3)^ab",
                   all(x == 0 for x in img))

    table = commutator_subgroup_table()
    sub_pres = reidemeister_schreier(cat.presentation, table)
    sub_ab = abelianization(sub_pres)
    report.add("lemma-3.9", f"[Gamma(3),Gamma(3)]^ab = {sub_ab}",
               sub_ab == AbelianInvariants(2, ()))

    conclusion = (ab_primed.is_finite and sub_ab == AbelianInvariants(2, ()))
    report.add("corollary-3.12",
               "finite H'(3)^ab inside a subgroup with infinite abelianization"
               " forces infinite index (finite-index transfer of Lemma 3.11)",
               conclusion)
    return report.raise_on_failure()
