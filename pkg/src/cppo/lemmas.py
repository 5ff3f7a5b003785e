"""Instance-level checks for the supporting results behind the two main
structure theorems.

Every check here is a concrete finite computation: coprime actions are
realized inside explicit affine permutation groups, automorphisms appear as
point permutations normalizing the group they act on, and each claimed
identity is verified by enumeration.  A check never samples the statement
away; randomness (seeded) only picks among instances, all of which must
pass.

Corpus-driven families (opelinha, casolo_quotient, the perfect-group
lemmas) restrict to corpus groups of order at most 1000 so the whole suite
stays in seconds; the bound is an instance policy, not a correctness cap.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .arith import factorization, is_prime_power, prime_factors
from .atlas import build
from .corpus import corpus_groups, default_corpus
from .errors import GroupError
from .fields import gf
from .group import FiniteGroup, Subgroup, quotient_by_normal
from .permutation import (
    Permutation,
    comm_raw,
    conj_raw,
    identity_raw,
    inv_raw,
    mul_raw,
    order_raw,
)
from .structure import (
    fitting_height,
    fitting_subgroup,
    frattini_of_p_group,
    is_nilpotent,
    is_quasisimple,
    is_simple,
    is_soluble,
    normal_subgroups,
    p_prime_part_of_nilpotent,
    sylow_subgroup,
)
from .towers import (
    Tower,
    _commutator_span,
    _p_subgroup_candidates,
    find_max_tower,
    validate_tower,
)


@dataclass
class LemmaCheck:
    lemma_id: str
    instance: str
    status: str  # "pass", "fail" or "undecided"
    witness: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# instance builders


def _raw_perm(images) -> Permutation:
    return Permutation._from_raw(tuple(images))


def _affine_line(q):
    """AGL(1,q) on q points with its translation and scaling parts split out."""
    F = gf(q)
    pts = list(F.elements)
    trans = [_raw_perm(F.add(x, b) for x in pts) for b in F.additive_basis]
    scale = _raw_perm(F.mul(F.generator(), x) for x in pts)
    amb = FiniteGroup(trans + [scale], degree=q, name="agl1(%d)" % q)
    return amb, amb.subgroup(trans), scale


def _block_raw(raw, offset, degree):
    images = list(range(degree))
    for i, img in enumerate(raw):
        images[i + offset] = img + offset
    return tuple(images)


def _affine_square(q):
    """Two independent affine lines side by side on 2q points."""
    F = gf(q)
    pts = list(F.elements)
    line_trans = [tuple(F.add(x, b) for x in pts) for b in F.additive_basis]
    line_scale = tuple(F.mul(F.generator(), x) for x in pts)
    degree = 2 * q
    trans = [_raw_perm(_block_raw(t, off, degree)) for off in (0, q) for t in line_trans]
    scales = [_raw_perm(_block_raw(line_scale, off, degree)) for off in (0, q)]
    amb = FiniteGroup(trans + scales, degree=degree, name="agl1(%d)^2" % q)
    return amb, amb.subgroup(trans), scales


def _affine_plane_3():
    """F3^2 with its translations and the quaternion subgroup of SL(2,3)."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    index = {v: i for i, v in enumerate(pts)}

    def translation(a, b):
        return _raw_perm(index[((x + a) % 3, (y + b) % 3)] for x, y in pts)

    def linear(m00, m01, m10, m11):
        return _raw_perm(
            index[((x * m00 + y * m10) % 3, (x * m01 + y * m11) % 3)] for x, y in pts
        )

    t1, t2 = translation(1, 0), translation(0, 1)
    mi = linear(0, 1, 2, 0)
    mj = linear(1, 1, 1, 2)
    amb = FiniteGroup([t1, t2, mi, mj], degree=9, name="f3^2:q8")
    if amb.order() != 72:
        raise GroupError("affine plane instance built wrong")
    v = amb.subgroup([t1, t2])
    q8 = amb.subgroup([mi, mj])
    if q8.order() != 8:
        raise GroupError("quaternion part of the affine plane instance is off")
    return amb, v, q8


def _product_of_lines(q1, q2):
    """AGL(1,q1) x AGL(1,q2) with the joint translation part."""
    F1, F2 = gf(q1), gf(q2)
    degree = q1 + q2
    t_parts = [tuple(F1.add(x, b) for x in F1.elements) for b in F1.additive_basis]
    t_parts2 = [tuple(F2.add(x, b) for x in F2.elements) for b in F2.additive_basis]
    s1 = tuple(F1.mul(F1.generator(), x) for x in F1.elements)
    s2 = tuple(F2.mul(F2.generator(), x) for x in F2.elements)
    trans = [_raw_perm(_block_raw(t, 0, degree)) for t in t_parts]
    trans += [_raw_perm(_block_raw(t, q1, degree)) for t in t_parts2]
    s1p = _raw_perm(_block_raw(s1, 0, degree))
    s2p = _raw_perm(_block_raw(s2, q1, degree))
    amb = FiniteGroup(trans + [s1p, s2p], degree=degree, name="agl1(%d)x(%d)" % (q1, q2))
    return amb, amb.subgroup(trans), s1p, s2p


def _s4_wreath_2():
    """S4 wr C2 on 8 points with an abelian three-stage tower inside it."""
    g = FiniteGroup(
        [
            Permutation([2, 1, 3, 4, 5, 6, 7, 8]),
            Permutation([2, 3, 4, 1, 5, 6, 7, 8]),
            Permutation([1, 2, 3, 4, 6, 5, 7, 8]),
            Permutation([1, 2, 3, 4, 6, 7, 8, 5]),
            Permutation([5, 6, 7, 8, 1, 2, 3, 4]),
        ],
        degree=8,
        name="s4wr2",
    )
    if g.order() != 1152:
        raise GroupError("wreath ambient built wrong")
    swap = g.generators[4].raw
    t12 = g.generators[0].raw
    x = Permutation._from_raw(mul_raw(swap, t12))  # (1 5 2 6)(3 7)(4 8)
    p1 = g.subgroup([x])
    p2 = g.subgroup([Permutation([2, 3, 1, 4, 5, 6, 7, 8]), Permutation([1, 2, 3, 4, 6, 7, 5, 8])])
    p3 = g.subgroup(
        [
            Permutation([2, 1, 4, 3, 5, 6, 7, 8]),
            Permutation([3, 4, 1, 2, 5, 6, 7, 8]),
            Permutation([1, 2, 3, 4, 6, 5, 8, 7]),
            Permutation([1, 2, 3, 4, 7, 8, 5, 6]),
        ]
    )
    return g, p1, p2, p3


def _heisenberg_with_flip():
    """Extraspecial 3^3 of exponent 3 with an involutory point map inverting
    both noncentral generators and fixing the centre pointwise."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    index = {v: i for i, v in enumerate(pts)}

    def aff(a, b, c):
        return _raw_perm(index[((x + a) % 3, (y + c + b * x) % 3)] for x, y in pts)

    P = FiniteGroup([aff(1, 0, 0), aff(0, 1, 0)], degree=9, name="heisenberg27")
    if P.order() != 27:
        raise GroupError("heisenberg instance built wrong")
    flip = _raw_perm(index[((-x) % 3, y)] for x, y in pts)
    return P, flip


# ---------------------------------------------------------------------------
# small computations shared by the checks


def _centralizer_raws(sub: Subgroup, action_raws):
    out = []
    for x in sub.group._raw_elements():
        if all(comm_raw(x, a) == identity_raw(len(x)) for a in action_raws):
            out.append(x)
    return out


def _join(ambient: FiniteGroup, *gen_lists) -> Subgroup:
    gens = []
    for gl in gen_lists:
        gens.extend(gl)
    return ambient._subgroup_raw(sorted(set(gens)))


def _subgroup_order_from_raws(ambient, raws):
    return ambient._subgroup_from_raw_elements(raws).order()


def _nontrivial_elements(sub: Subgroup):
    ident = identity_raw(sub.degree)
    return [x for x in sub.group._raw_elements() if x != ident]


def _is_quaternion8(sub: Subgroup) -> bool:
    if sub.order() != 8:
        return False
    invs = [x for x in sub.group._raw_elements() if order_raw(x) == 2]
    return len(invs) == 1


def _coprime(sub_a: Subgroup, sub_g: Subgroup) -> bool:
    return math.gcd(sub_a.order(), sub_g.order()) == 1


def _order3_rep(g: FiniteGroup) -> tuple:
    return next(
        c.representative.raw for c in g.conjugacy_classes() if c.representative.order() == 3
    )


def _coprime_pairs():
    """(tag, ambient, acted-on subgroup, acting subgroup), acting part cyclic
    unless noted.  Every pair has coprime orders and the acting subgroup
    normalizes the acted-on one; both facts are asserted downstream."""
    pairs = []
    for q in (4, 5, 7, 8, 9):
        amb, v, scale = _affine_line(q)
        n = q - 1
        for d in sorted(x for x in range(2, n + 1) if n % x == 0):
            a = amb.subgroup([scale ** (n // d)])
            pairs.append(("agl1(%d) torus part of order %d on translations" % (q, d), amb, v, a))
    sl23 = build("sl2_3").group
    q8 = sl23._subgroup_raw(sl23.derived_subgroup().group._raw_gens)
    pairs.append(
        (
            "sl2_3 order-3 element on its quaternion subgroup",
            sl23,
            q8,
            sl23._subgroup_raw([_order3_rep(sl23)]),
        )
    )
    amb, v, s1, s2 = _product_of_lines(5, 7)
    diag = mul_raw(s1.raw, s2.raw)
    pairs.append(("c35 under a diagonal of order 12", amb, v, amb._subgroup_raw([diag])))
    half = mul_raw((s1**2).raw, (s2**3).raw)
    pairs.append(("c35 under the diagonal involution", amb, v, amb._subgroup_raw([half])))
    return pairs


def _noncyclic_abelian_pairs():
    pairs = []
    amb, v, scales = _affine_square(4)
    pairs.append(("c2^4 under c3 x c3", amb, v, amb.subgroup(scales)))
    amb5, v5, scales5 = _affine_square(5)
    pairs.append(("c5^2 under c2 x c2", amb5, v5, amb5.subgroup([s**2 for s in scales5])))
    amb9, v9, scales9 = _affine_square(9)
    pairs.append(("c3^4 under c2 x c2", amb9, v9, amb9.subgroup([s**4 for s in scales9])))
    return pairs


def _comm_sub(amb, a_sub: Subgroup, g_sub: Subgroup) -> Subgroup:
    return _commutator_span(amb, list(a_sub.group._raw_gens), g_sub.group)


def _check_action_preconditions(amb, g_sub, a_sub):
    if not _coprime(a_sub, g_sub):
        raise GroupError("instance is not coprime")
    chain = g_sub.group.chain()
    for a in a_sub.group._raw_gens:
        for x in g_sub.group._raw_gens:
            if not chain.contains_raw(conj_raw(x, a)):
                raise GroupError("acting subgroup fails to normalize the instance")


# ---------------------------------------------------------------------------
# check families


def check_cc_i(seed=0):
    out = []
    for tag, amb, g, a in _coprime_pairs():
        _check_action_preconditions(amb, g, a)
        comm = _comm_sub(amb, a, g)
        cent = _centralizer_raws(g, a.group._raw_gens)
        total = _join(amb, comm.group._raw_gens, cent)
        ok = total.order() == g.order()
        witness = {"comm_order": comm.order(), "cent_order": len(cent)}
        if ok and g.group.is_abelian():
            meet = set(comm.group._raw_elements()) & set(cent)
            ok = len(meet) == 1
            witness["meet_order"] = len(meet)
        out.append(LemmaCheck("cc_i", tag, "pass" if ok else "fail", witness))
    return out


def check_cc_ii(seed=0):
    out = []
    for tag, amb, g, a in _coprime_pairs():
        _check_action_preconditions(amb, g, a)
        once = _comm_sub(amb, a, g)
        twice = _comm_sub(amb, a, once)
        ok = once.same_subgroup_as(twice)
        out.append(
            LemmaCheck(
                "cc_ii", tag, "pass" if ok else "fail",
                {"once": once.order(), "twice": twice.order()},
            )
        )
    return out


def _cc_iii_instances():
    amb, v, s1, s2 = _product_of_lines(5, 7)
    half = mul_raw((s1**2).raw, (s2**3).raw)
    c5 = amb.subgroup([v.generators[0]])
    yield "c35 mod its c5 part", amb, v, amb._subgroup_raw([half]), c5
    sl23 = build("sl2_3").group
    q8 = sl23._subgroup_raw(sl23.derived_subgroup().group._raw_gens)
    a3 = sl23._subgroup_raw([_order3_rep(sl23)])
    yield "q8 mod its centre", sl23, q8, a3, sl23.center()
    amb4, v4, scales4 = _affine_square(4)
    a = amb4.subgroup(scales4)
    first_block = amb4.subgroup(v4.generators[:2])
    yield "c2^4 mod one block", amb4, v4, a, first_block


def check_cc_iii(seed=0):
    out = []
    for tag, amb, g, a, n in _cc_iii_instances():
        _check_action_preconditions(amb, g, a)
        nchain = n.group.chain()
        # fixed points of the action on G/N, pulled back to G
        pulled = [
            x
            for x in g.group._raw_elements()
            if all(nchain.contains_raw(comm_raw(x, ag)) for ag in a.group._raw_gens)
        ]
        lhs = _subgroup_order_from_raws(amb, pulled)
        cent = _centralizer_raws(g, a.group._raw_gens)
        rhs = _join(amb, n.group._raw_gens, cent).order()
        ok = lhs == rhs
        out.append(
            LemmaCheck("cc_iii", tag, "pass" if ok else "fail", {"lhs": lhs, "rhs": rhs})
        )
    return out


def check_cc_v(seed=0):
    out = []
    for tag, amb, g, a in _noncyclic_abelian_pairs():
        _check_action_preconditions(amb, g, a)
        if not is_nilpotent(g.group) or a.group.is_cyclic():
            raise GroupError("cc_v instance out of scope")
        pieces = []
        for aelt in _nontrivial_elements(a):
            pieces.append(_centralizer_raws(g, [aelt]))
        total = _join(amb, *pieces)
        ok = total.order() == g.order()
        out.append(
            LemmaCheck(
                "cc_v", tag, "pass" if ok else "fail",
                {"product_order": total.order(), "group_order": g.order()},
            )
        )
    return out


def _cc_vi_instances():
    amb, v, s1, s2 = _product_of_lines(5, 7)
    diag = mul_raw(s1.raw, s2.raw)
    half = mul_raw((s1**2).raw, (s2**3).raw)
    yield "c35 with the order-12 diagonal", amb, v, amb._subgroup_raw([diag])
    yield "c35 with the diagonal involution", amb, v, amb._subgroup_raw([half])
    # nonabelian target: the Frobenius group of order 21 under an involution
    amb7, v7, scale7 = _affine_line(7)
    f21 = amb7.subgroup(list(v7.generators) + [scale7**2])
    yield "frobenius 21 under an involution", amb7, f21, amb7.subgroup([scale7**3])
    sl23 = build("sl2_3").group
    q8 = sl23._subgroup_raw(sl23.derived_subgroup().group._raw_gens)
    yield "quaternion group under an order-3 element", sl23, q8, sl23._subgroup_raw(
        [_order3_rep(sl23)]
    )


def check_cc_vi(seed=0):
    out = []
    for tag, amb, g, a in _cc_vi_instances():
        _check_action_preconditions(amb, g, a)
        witness = {}
        ok = True
        for p in prime_factors(g.order()):
            syl = sylow_subgroup(g.group, p)
            found = _invariant_conjugate(amb, g, syl, a)
            witness[str(p)] = "found" if found else "missing"
            if not found:
                ok = False
        out.append(LemmaCheck("cc_vi", tag, "pass" if ok else "fail", witness))
    return out


def _invariant_conjugate(amb, g: Subgroup, syl: Subgroup, a: Subgroup):
    """Some g-conjugate of the Sylow subgroup fixed by the acting subgroup."""
    base = syl.group._raw_gens
    seen = set()
    for c in g.group._raw_elements():
        gens = tuple(sorted(conj_raw(x, c) for x in base))
        if gens in seen:
            continue
        seen.add(gens)
        cand = amb._subgroup_raw(list(gens))
        chain = cand.group.chain()
        if all(
            chain.contains_raw(conj_raw(x, ag))
            for ag in a.group._raw_gens
            for x in gens
        ):
            return cand
    return None


def check_kurzweil(seed=0):
    out = []
    fpf = []
    for q in (4, 5, 7, 8, 9):
        amb, v, scale = _affine_line(q)
        n = q - 1
        for d in sorted(x for x in range(2, n + 1) if n % x == 0):
            a = amb.subgroup([scale ** (n // d)])
            fpf.append(("agl1(%d) scaling subgroup of order %d" % (q, d), amb, v, a))
    for tag, amb, v, a in fpf:
        _check_action_preconditions(amb, v, a)
        if any(len(_centralizer_raws(v, [x])) > 1 for x in _nontrivial_elements(a)):
            raise GroupError("kurzweil instance is not fixed point free")
        conditions = a.group.is_abelian() or (
            len(factorization(a.order())) == 1
            and (a.order() % 2 == 1 or not _is_quaternion8(a))
        )
        if not conditions:
            raise GroupError("kurzweil instance misses every hypothesis")
        ok = a.group.is_cyclic()
        out.append(LemmaCheck("kurzweil", tag, "pass" if ok else "fail", {"a_order": a.order()}))
    amb, v, q8 = _affine_plane_3()
    _check_action_preconditions(amb, v, q8)
    if any(len(_centralizer_raws(v, [x])) > 1 for x in _nontrivial_elements(q8)):
        raise GroupError("quaternion instance is not fixed point free")
    exception_ok = (not q8.group.is_cyclic()) and _is_quaternion8(q8)
    out.append(
        LemmaCheck(
            "kurzweil",
            "q8 acting freely on c3 x c3",
            "pass" if exception_ok else "fail",
            {"note": "the permitted quaternion exception: noncyclic yet fixed point free"},
        )
    )
    return out


def check_acnoncop(seed=0):
    rng = random.Random(seed)
    instances = list(_noncyclic_abelian_pairs())
    # conjugated copies are genuinely different subgroup pairs of the ambient
    extra = []
    for tag, amb, v, a in instances[:2]:
        elems = amb._raw_elements()
        c = elems[rng.randrange(len(elems))]
        vv = amb._subgroup_raw([conj_raw(x, c) for x in v.group._raw_gens])
        aa = amb._subgroup_raw([conj_raw(x, c) for x in a.group._raw_gens])
        extra.append((tag + ", conjugated", amb, vv, aa))
    out = []
    for tag, amb, v, a in instances + extra:
        _check_action_preconditions(amb, v, a)
        if a.group.is_cyclic() or not a.group.is_abelian() or not v.group.is_abelian():
            raise GroupError("acnoncop instance out of scope")
        meet = None
        for aelt in _nontrivial_elements(a):
            part = set(
                _commutator_span(amb, [aelt], v.group).group._raw_elements()
            )
            meet = part if meet is None else (meet & part)
        ok = meet is not None and len(meet) == 1
        out.append(
            LemmaCheck(
                "acnoncop", tag, "pass" if ok else "fail",
                {"intersection_order": len(meet) if meet else 0},
            )
        )
    return out


def _orderofav_instances():
    for q, powers in ((5, (1, 2)), (7, (1, 2, 3)), (8, (1,)), (9, (1, 2, 4))):
        amb, v, scale = _affine_line(q)
        for k in powers:
            a = scale**k
            yield "agl1(%d) with a of order %d" % (q, a.order()), amb, v, a.raw
    amb, v, s1, s2 = _product_of_lines(5, 7)
    yield "c35 with a acting on the c5 part only", amb, v, s1.raw
    yield "c35 with a acting on the c7 part only", amb, v, (s2**2).raw


def check_orderofav(seed=0):
    out = []
    for tag, amb, v, a_raw in _orderofav_instances():
        n = v.order()
        if math.gcd(n, order_raw(a_raw)) != 1:
            raise GroupError("orderofav instance is not coprime")
        comm = _commutator_span(amb, [a_raw], v.group)
        chain = comm.group.chain()
        ok = True
        checked = 0
        for velt in v.group._raw_elements():
            if math.gcd(n, order_raw(mul_raw(a_raw, velt))) != 1:
                continue
            checked += 1
            if not chain.contains_raw(velt):
                ok = False
                break
        out.append(
            LemmaCheck(
                "orderofav", tag, "pass" if ok else "fail",
                {"qualifying_elements": checked, "comm_order": comm.order()},
            )
        )
    return out


def check_autoofextra(seed=0):
    out = []

    def verify(tag, P, phi_raw, ambient):
        # the automorphism must normalize P and centralize exactly the frattini part
        chain = P.chain()
        if not all(chain.contains_raw(conj_raw(x, phi_raw)) for x in P._raw_gens):
            raise GroupError("automorphism fails to normalize the instance")
        if math.gcd(order_raw(phi_raw), P.order()) != 1:
            raise GroupError("automorphism order is not coprime")
        whole = ambient._subgroup_raw(P._raw_gens)
        fixed = _centralizer_raws(whole, [phi_raw])
        frat = frattini_of_p_group(P)
        hypo = sorted(fixed) == sorted(frat.group._raw_elements())
        if not hypo:
            raise GroupError("fixed points differ from the frattini subgroup")
        values = {comm_raw(x, phi_raw) for x in P._raw_elements()}
        closed = set(values)
        frontier = list(values)
        while frontier:
            y = frontier.pop()
            for g in P._raw_gens:
                z = conj_raw(y, g)
                if z not in closed:
                    closed.add(z)
                    frontier.append(z)
        frat_set = set(frat.group._raw_elements())
        missing = [x for x in P._raw_elements() if x not in frat_set and x not in closed]
        out.append(
            LemmaCheck(
                "autoofextra", tag, "pass" if not missing else "fail",
                {"value_count": len(values), "missed": len(missing)},
            )
        )

    P, flip = _heisenberg_with_flip()
    amb = FiniteGroup(P.generators + [flip], degree=9)
    verify("heisenberg 27 under the inverting involution", P, flip.raw, amb)

    sl23 = build("sl2_3").group
    q8 = sl23.derived_subgroup().group
    verify("quaternion group under an order-3 automorphism", q8, _order3_rep(sl23), sl23)
    return out


def _q8_automorphisms():
    """All automorphisms of the quaternion group of order 8 as element maps."""
    q8 = build("q8").group
    elems = sorted(q8._raw_elements())
    ident = identity_raw(q8.degree)
    order4 = [x for x in elems if order_raw(x) == 4]
    i0 = order4[0]
    j0 = next(x for x in order4 if x not in (i0, inv_raw(i0)))
    words = {}
    for a in range(4):
        for b in range(2):
            w = ident
            for _ in range(a):
                w = mul_raw(w, i0)
            if b:
                w = mul_raw(w, j0)
            words[(a, b)] = w
    if len(set(words.values())) != 8:
        raise GroupError("quaternion word table is wrong")
    auts = []
    for u in order4:
        for v in order4:
            if v in (u, inv_raw(u)):
                continue
            phi = {}
            good = True
            for (a, b), w in words.items():
                img = ident
                for _ in range(a):
                    img = mul_raw(img, u)
                if b:
                    img = mul_raw(img, v)
                phi[w] = img
            if len(set(phi.values())) != 8:
                continue
            for x in elems:
                for y in elems:
                    if phi[mul_raw(x, y)] != mul_raw(phi[x], phi[y]):
                        good = False
                        break
                if not good:
                    break
            if good:
                auts.append(phi)
    if len(auts) != 24:
        raise GroupError("expected 24 automorphisms of q8, found %d" % len(auts))
    return q8, elems, auts


def check_autodoquaternion(seed=0):
    q8, elems, auts = _q8_automorphisms()
    z = next(x for x in elems if order_raw(x) == 2)
    involutory = [
        phi for phi in auts if all(phi[phi[x]] == x for x in elems) and any(phi[x] != x for x in elems)
    ]
    out = [
        LemmaCheck(
            "autodoquaternion",
            "automorphism group size",
            "pass" if len(auts) == 24 else "fail",
            {"count": len(auts), "involutory": len(involutory)},
        )
    ]
    for k, phi in enumerate(involutory):
        hit = None
        for u in elems:
            if mul_raw(inv_raw(u), phi[u]) == z:
                hit = u
                break
        out.append(
            LemmaCheck(
                "autodoquaternion",
                "involutory automorphism %d" % (k + 1),
                "pass" if hit is not None else "fail",
                {"u_found": hit is not None},
            )
        )
    return out


def check_aaa_scenario(seed=0):
    rng = random.Random(seed)
    amb, p1, p2, p3 = _s4_wreath_2()
    stage_sets = [(p1, p2, p3)]
    elems = amb._raw_elements()
    for _ in range(3):
        c = elems[rng.randrange(len(elems))]
        stage_sets.append(
            tuple(
                amb._subgroup_raw([conj_raw(x, c) for x in s.group._raw_gens])
                for s in (p1, p2, p3)
            )
        )
    out = []
    for k, (a1, a2, a3) in enumerate(stage_sets):
        tower = Tower(amb, [(2, a1), (3, a2), (2, a3)])
        report = validate_tower(tower)
        hypo = (
            report.valid
            and a1.group.is_cyclic()
            and a2.group.is_abelian()
            and not a2.group.is_cyclic()
            and a3.group.is_abelian()
            and _comm_sub(amb, a1, a2).same_subgroup_as(a2)
        )
        if not hypo:
            out.append(
                LemmaCheck("aaa_scenario", "instance %d" % (k + 1), "fail", {"hypotheses": False})
            )
            continue
        scope = FiniteGroup(
            a1.generators + a2.generators + a3.generators, degree=amb.degree
        )
        wit = scope.cppo_witness()
        ok = wit is not None and not is_prime_power(wit.order)
        out.append(
            LemmaCheck(
                "aaa_scenario",
                "instance %d" % (k + 1),
                "pass" if ok else "fail",
                {
                    "scope_order": scope.order(),
                    "witness_order": wit.order if wit else None,
                },
            )
        )
    return out


def _corpus_upto(bound):
    docs = [d for d in default_corpus()]
    out = []
    for name, g in corpus_groups(docs):
        if g.order() <= bound:
            out.append((name, g))
    return out


def check_opelinha(seed=0):
    out = []
    for name, g in _corpus_upto(1000):
        if not g.is_cppo():
            continue
        centre = g.center()
        zchain = centre.group.chain()
        count = 0
        for n in normal_subgroups(g):
            if n.order() == 1 or not is_nilpotent(n.group):
                continue
            count += 1
            if count > 8:  # keep reports readable on lattice-rich groups
                break
            good_p = None
            for p in prime_factors(n.order()):
                part = p_prime_part_of_nilpotent(n.group, p)
                if all(zchain.contains_raw(x) for x in part.group._raw_gens):
                    good_p = p
                    break
            out.append(
                LemmaCheck(
                    "opelinha",
                    "%s, nilpotent normal of order %d" % (name, n.order()),
                    "pass" if good_p is not None else "fail",
                    {"p": good_p},
                )
            )
    return out


def check_directproduct(seed=0):
    rng = random.Random(seed)
    pool = ["q8", "dihedral(4)", "sl2_3", "extraspecial(3,+)"]
    picks = [
        ("q8", "dihedral(4)"),
        ("dihedral(4)", "dihedral(4)"),
        ("q8", "q8"),
        ("sl2_3", "sl2_3"),
        ("extraspecial(3,+)", "extraspecial(3,+)"),
    ]
    for _ in range(2):
        picks.append((rng.choice(pool), rng.choice(pool)))
    out = []
    seen = set()
    for left, right in picks:
        key = (left, right)
        if key in seen:
            continue
        seen.add(key)
        g = build("direct_product(%s,%s)" % (left, right)).group
        factors = (build(left).group, build(right).group)
        if any(f.is_abelian() for f in factors):
            raise GroupError("direct product instance needs nonabelian factors")
        tag = "%s x %s" % (left, right)
        if not g.is_cppo():
            wit = g.cppo_witness()
            out.append(
                LemmaCheck(
                    "directproduct", tag, "pass",
                    {"note": "not cppo, out of scope", "witness_order": wit.order},
                )
            )
            continue
        d = g.derived_subgroup()
        fact = factorization(d.order())
        ok = len(fact) == 1
        out.append(
            LemmaCheck(
                "directproduct", tag, "pass" if ok else "fail",
                {"derived_order": d.order()},
            )
        )
    return out


def check_solubleperfect(seed=0):
    rng = random.Random(seed)
    out = []
    for gid, nkind in (("sl2_5", "centre"), ("sl2_9", "centre"), ("asl2_4", "fitting")):
        g = build(gid).group
        n = g.center() if nkind == "centre" else fitting_subgroup(g)
        if g.derived_subgroup().order() != g.order():
            raise GroupError("instance group is not perfect")
        if not is_soluble(n.group):
            raise GroupError("chosen normal part is not soluble")
        q = quotient_by_normal(g, n)
        if not is_simple(q):
            raise GroupError("quotient by the normal part is not simple")
        nchain = n.group.chain()
        elems = g._raw_elements()
        chosen = []
        while len(chosen) < 3:
            x = elems[rng.randrange(len(elems))]
            if not nchain.contains_raw(x):
                chosen.append(x)
        for k, x in enumerate(chosen):
            qsub = g._subgroup_raw([x])
            span = _commutator_span(g, list(qsub.group._raw_gens), g)
            ok = span.order() == g.order()
            out.append(
                LemmaCheck(
                    "solubleperfect",
                    "%s with cyclic q of order %d, sample %d" % (gid, order_raw(x), k + 1),
                    "pass" if ok else "fail",
                    {"span_order": span.order()},
                )
            )
    return out


def check_existelemabelqsub(seed=0):
    # primes listed per group avoid the soluble part: for the quasisimple and
    # affine cases only primes outside the relevant normal subgroup qualify
    cases = [
        ("alt(5)", (2, 3, 5)),
        ("psl2(7)", (2, 3, 7)),
        ("asl2_4", (3, 5)),
        ("sl2_5", (3, 5)),
        ("sl2_9", (3, 5)),
    ]
    out = []
    for gid, qs in cases:
        g = build(gid).group
        for qprime in qs:
            found = _find_covered_elem_abelian(g, qprime)
            out.append(
                LemmaCheck(
                    "existelemabelqsub",
                    "%s with q = %d" % (gid, qprime),
                    "pass" if found else "fail",
                    found or {},
                )
            )
    return out


def _find_covered_elem_abelian(g: FiniteGroup, qprime: int):
    """An elementary abelian q-subgroup Q and a coprime prime-power element a
    with [Q, a] = Q, by direct search over small q-subgroups."""
    candidates = [
        c
        for c in _p_subgroup_candidates(g, qprime)
        if c.group.is_elementary_abelian()
    ]
    elems = g._raw_elements()
    for cand in candidates[:40]:
        chain = cand.group.chain()
        size = cand.order()
        for a in elems:
            o = order_raw(a)
            if o == 1 or not is_prime_power(o) or o % qprime == 0:
                continue
            if not all(chain.contains_raw(conj_raw(x, a)) for x in cand.group._raw_gens):
                continue
            span = _commutator_span(g, [a], cand.group)
            if span.order() == size:
                return {"q_order": size, "a_order": o}
    return None


def check_quasisimple_negative(seed=0):
    out = []
    for gid in ("sl2_5", "sl2_9"):
        g = build(gid).group
        if not is_quasisimple(g):
            raise GroupError("%s should be quasisimple" % gid)
        wit = g.cppo_witness()
        ok = wit is not None and not is_prime_power(wit.order)
        out.append(
            LemmaCheck(
                "quasisimple_negative",
                gid,
                "pass" if ok else "fail",
                {"witness_order": wit.order if wit else None},
            )
        )
    return out


def check_ore_spotcheck(seed=0):
    out = []
    for q in (4, 5, 7, 8, 9):
        g = build(("psl2", [q])).group
        comm = g.commutator_set()
        ok = len(comm) == g.order()
        out.append(
            LemmaCheck(
                "ore_spotcheck",
                "psl2(%d)" % q,
                "pass" if ok else "fail",
                {"commutators": len(comm), "order": g.order()},
            )
        )
    return out


def check_casolo_quotient(seed=0):
    out = []
    for name, g in _corpus_upto(500):
        if not is_soluble(g):
            continue
        h = fitting_height(g)
        if h < 2:
            continue
        _, tower = find_max_tower(g)
        stage_elems = [s.group._raw_elements() for _, s in tower.stages]
        bottom_gens = tower.stages[-1][1].group._raw_gens
        ident = identity_raw(g.degree)
        taken = 0
        for n in normal_subgroups(g):
            if taken >= 4:
                break
            nchain = n.group.chain()
            hypo = True
            for i in range(len(tower.stages) - 1):
                for x in stage_elems[i]:
                    if nchain.contains_raw(x):
                        if any(comm_raw(b, x) != ident for b in bottom_gens):
                            hypo = False
                            break
                if not hypo:
                    break
            if not hypo:
                continue
            taken += 1
            quo = quotient_by_normal(g, n)
            image_stages = []
            for p, s in tower.stages[:-1]:
                gens = [quo.project(x) for x in s.generators]
                image_stages.append((p, quo.subgroup(gens)))
            img = Tower(quo, image_stages)
            ok = validate_tower(img).valid
            out.append(
                LemmaCheck(
                    "casolo_quotient",
                    "%s mod normal of order %d" % (name, n.order()),
                    "pass" if ok else "fail",
                    {"image_height": img.height},
                )
            )
    return out


def check_p3_noncyclic(seed=0):
    out = []
    towers = []
    for name, g in _corpus_upto(500):
        if is_soluble(g) and fitting_height(g) >= 3:
            towers.append((name, find_max_tower(g)[1]))
    amb, p1, p2, p3 = _s4_wreath_2()
    towers.append(("s4wr2 abelian tower", Tower(amb, [(2, p1), (3, p2), (2, p3)])))
    for name, tower in towers:
        bad = [
            i + 1
            for i, (_, s) in enumerate(tower.stages)
            if i + 1 >= 3 and s.group.is_cyclic()
        ]
        out.append(
            LemmaCheck(
                "p3_noncyclic",
                "%s, height %d" % (name, tower.height),
                "pass" if not bad else "fail",
                {"cyclic_stages": bad},
            )
        )
    return out


REGISTRY = {
    "cc_i": check_cc_i,
    "cc_ii": check_cc_ii,
    "cc_iii": check_cc_iii,
    "cc_v": check_cc_v,
    "cc_vi": check_cc_vi,
    "kurzweil": check_kurzweil,
    "acnoncop": check_acnoncop,
    "orderofav": check_orderofav,
    "autoofextra": check_autoofextra,
    "autodoquaternion": check_autodoquaternion,
    "aaa_scenario": check_aaa_scenario,
    "opelinha": check_opelinha,
    "directproduct": check_directproduct,
    "solubleperfect": check_solubleperfect,
    "existelemabelqsub": check_existelemabelqsub,
    "quasisimple_negative": check_quasisimple_negative,
    "ore_spotcheck": check_ore_spotcheck,
    "casolo_quotient": check_casolo_quotient,
    "p3_noncyclic": check_p3_noncyclic,
}

MICRO_SUITE = (
    "autodoquaternion",
    "autoofextra",
    "acnoncop",
    "orderofav",
    "kurzweil",
    "cc_i",
    "cc_ii",
    "cc_iii",
    "cc_v",
    "cc_vi",
    "opelinha",
    "aaa_scenario",
    "quasisimple_negative",
)
