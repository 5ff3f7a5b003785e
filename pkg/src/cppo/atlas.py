"""Constructive catalog of concrete permutation groups.

Every named group the rest of the package works with is built here from
scratch: projective lines and planes over small fields, affine actions,
regular representations of matrix groups, the 65-point Suzuki ovoid, and a
handful of direct and central products.  Each build states its expected
order up front and fails loudly if the computed order disagrees, so a broken
construction can never masquerade as data.

Conventions.  Projective points are row vectors normalized so the leftmost
nonzero coordinate is 1, sorted lexicographically.  Matrices act on the
right (v -> vM), which makes M -> permutation a homomorphism under our
left-to-right composition.  Line coordinates transform by the inverse
transpose, and the duality swaps the point <v> with the line of the same
coordinate vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import AtlasError, SchemaError
from .fields import GF, Matrix, gf
from .group import FiniteGroup
from .permutation import Permutation, mul_raw, parse_permutation


@dataclass
class BuiltGroup:
    id_text: str
    group: FiniteGroup
    expected_order: int
    notes: str = ""
    extras: dict = field(default_factory=dict)


def _finish(id_text, gens, degree, expected, notes="", extras=None):
    group = FiniteGroup(gens, degree=degree, name=id_text)
    got = group.order()
    if got != expected:
        raise AtlasError(
            "construction %s came out with order %d, expected %d" % (id_text, got, expected)
        )
    return BuiltGroup(id_text, group, expected, notes, extras or {})


def _perm(images0):
    return Permutation._from_raw(tuple(images0))


# ---------------------------------------------------------------------------
# easy families


def _build_cyclic(n):
    if n < 1:
        raise AtlasError("cyclic(n) needs n >= 1")
    if n == 1:
        return _finish("cyclic(1)", [], 1, 1)
    images = tuple(list(range(1, n)) + [0])
    return _finish("cyclic(%d)" % n, [_perm(images)], n, n)


def _build_elem_abelian(p, k):
    from .arith import is_prime

    if not is_prime(p) or k < 1 or p**k > 4096:
        raise AtlasError("elem_abelian(p, k) needs a prime p with p^k manageable")
    degree = p * k
    gens = []
    for i in range(k):
        images = list(range(degree))
        for j in range(p):
            images[i * p + j] = i * p + (j + 1) % p
        gens.append(_perm(tuple(images)))
    return _finish("elem_abelian(%d,%d)" % (p, k), gens, degree, p**k)


def _build_dihedral(n):
    if n < 2:
        raise AtlasError("dihedral(n) needs n >= 2")
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((n - i) % n for i in range(n))
    return _finish("dihedral(%d)" % n, [_perm(rot), _perm(ref)], n, 2 * n)


def _sym_gens(n):
    if n == 1:
        return []
    swap = tuple([1, 0] + list(range(2, n)))
    cyc = tuple(list(range(1, n)) + [0])
    return [_perm(swap), _perm(cyc)]


def _build_sym(n):
    if n < 1 or n > 12:
        raise AtlasError("sym(n) supported for 1 <= n <= 12")
    return _finish("sym(%d)" % n, _sym_gens(n), max(n, 1), math.factorial(n))


def _build_alt(n):
    if n < 3 or n > 12:
        raise AtlasError("alt(n) supported for 3 <= n <= 12")
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2 == 1:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = tuple([0] + list(range(2, n)) + [1])
    return _finish("alt(%d)" % n, [_perm(three), _perm(big)], n, math.factorial(n) // 2)


# ---------------------------------------------------------------------------
# regular representations of matrix groups


def _matrix_group_elements(gens):
    ident = Matrix.identity(gens[0].field, gens[0].n)
    seen = {ident.rows: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.rows not in seen:
                    seen[y.rows] = y
                    nxt.append(y)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def _regular_rep(id_text, mat_gens, expected, notes=""):
    elems = _matrix_group_elements(mat_gens)
    if len(elems) != expected:
        raise AtlasError(
            "matrix model for %s has %d elements, expected %d" % (id_text, len(elems), expected)
        )
    index = {m.rows: i for i, m in enumerate(elems)}
    perms = []
    for g in mat_gens:
        perms.append(_perm(tuple(index[(x * g).rows] for x in elems)))
    return _finish(id_text, perms, expected, expected, notes)


def _q8_matrix_gens():
    F3 = gf(3)
    i = Matrix(F3, [[0, 1], [2, 0]])
    j = Matrix(F3, [[1, 1], [1, 2]])
    return [i, j]


def _build_q8():
    return _regular_rep("q8", _q8_matrix_gens(), 8, "regular representation")


def _build_sl2_3():
    F3 = gf(3)
    gens = [Matrix(F3, [[1, 1], [0, 1]]), Matrix(F3, [[0, 1], [2, 0]])]
    return _regular_rep("sl2_3", gens, 24, "regular representation")


def _build_sl2_5():
    F5 = gf(5)
    gens = [Matrix(F5, [[1, 1], [0, 1]]), Matrix(F5, [[0, 1], [4, 0]])]
    return _regular_rep("sl2_5", gens, 120, "regular representation")


def _build_sl2_9():
    F9 = gf(9)
    a = 3  # the square root of -1 in our coding
    gens = [
        Matrix(F9, [[1, 1], [0, 1]]),
        Matrix(F9, [[1, a], [0, 1]]),
        Matrix(F9, [[0, 1], [2, 0]]),
    ]
    return _regular_rep("sl2_9", gens, 720, "regular representation")


# ---------------------------------------------------------------------------
# extraspecial groups


def _build_extraspecial(p, sign):
    if p not in (2, 3, 5) or sign not in ("+", "-"):
        raise AtlasError("extraspecial(p, sign) needs p in {2,3,5} and sign + or -")
    if p == 2:
        return _extraspecial_32(sign)
    if sign == "+":
        # Heisenberg model: affine maps (x, y) -> (x + a, y + c + b*x) on p^2 points
        pts = [(x, y) for x in range(p) for y in range(p)]
        index = {v: i for i, v in enumerate(pts)}

        def aff(a, b, c):
            return _perm(
                tuple(index[((x + a) % p, (y + c + b * x) % p)] for x, y in pts)
            )

        gens = [aff(1, 0, 0), aff(0, 1, 0)]
        return _finish(
            "extraspecial(%d,+)" % p, gens, p * p, p**3, "Heisenberg model, exponent %d" % p
        )
    # exponent p^2 model: x -> (1+p)^j * x + i on Z_{p^2}
    m = p * p
    shift = _perm(tuple((x + 1) % m for x in range(m)))
    twist = _perm(tuple(((1 + p) * x) % m for x in range(m)))
    return _finish(
        "extraspecial(%d,-)" % p, [shift, twist], m, p**3, "exponent %d model" % (p * p)
    )


def _extraspecial_32(sign):
    from .group import quotient_by_normal

    d8 = _build_dihedral(4)
    if sign == "+":
        other = _build_dihedral(4)
        label = "extraspecial(2,+)"
        notes = "central product of two dihedral groups of order 8"
    else:
        other = _build_q8()
        label = "extraspecial(2,-)"
        notes = "central product of dihedral order 8 with q8"
    left = d8.group
    right = other.group
    big = _direct_product_group(left, right)
    z_left = (left.generators[0] ** 2).raw
    z_right = (right.generators[0] ** 2).raw
    fused = mul_raw(
        tuple(z_left) + tuple(left.degree + i for i in range(right.degree)),
        tuple(range(left.degree)) + tuple(left.degree + i for i in z_right),
    )
    center_diag = FiniteGroup([Permutation._from_raw(fused)], degree=big.degree)
    q = quotient_by_normal(big, center_diag)
    if q.order() != 32:
        raise AtlasError("central product came out with order %d" % q.order())
    group = FiniteGroup(q.generators, degree=q.degree, name=label)
    return _finish(label, group.generators, group.degree, 32, notes)


# ---------------------------------------------------------------------------
# affine constructions


def _build_agl1(q):
    F = gf(q)
    pts = list(F.elements)
    gens = []
    for b in F.additive_basis:
        gens.append(_perm(tuple(F.add(x, b) for x in pts)))
    g = F.generator()
    if q > 2:
        gens.append(_perm(tuple(F.mul(g, x) for x in pts)))
    return _finish("agl1(%d)" % q, gens, q, q * (q - 1), "affine maps x -> ax + b")


def _build_asl2_4():
    F = gf(4)
    pts = [(x, y) for x in F.elements for y in F.elements]
    index = {v: i for i, v in enumerate(pts)}

    def linear(M):
        return _perm(tuple(index[M.apply_row(v)] for v in pts))

    def translation(t):
        return _perm(tuple(index[(F.add(v[0], t[0]), F.add(v[1], t[1]))] for v in pts))

    a = 2
    gens = [
        linear(Matrix(F, [[1, 1], [0, 1]])),
        linear(Matrix(F, [[1, a], [0, 1]])),
        linear(Matrix(F, [[0, 1], [1, 0]])),
        translation((1, 0)),
    ]
    return _finish("asl2_4", gens, 16, 960, "F4^2 translations extended by SL(2,4)")


# ---------------------------------------------------------------------------
# projective lines: PSL(2, q) and the four groups between PSL(2,9) and PGammaL(2,9)


def _p1_points(F: GF):
    # index 0 is the point at infinity, then field elements in integer order
    return [None] + list(F.elements)


def _p1_translation(F, c):
    pts = _p1_points(F)
    return _perm(tuple(0 if x is None else 1 + F.add(x, c) for x in pts))


def _p1_scaling(F, a):
    pts = _p1_points(F)
    return _perm(tuple(0 if x is None else 1 + F.mul(a, x) for x in pts))


def _p1_inversion(F):
    # x -> -1/x, infinity <-> 0
    pts = _p1_points(F)
    out = []
    for x in pts:
        if x is None:
            out.append(1)
        elif x == 0:
            out.append(0)
        else:
            out.append(1 + F.neg(F.inv(x)))
    return _perm(tuple(out))


def _p1_frobenius(F):
    pts = _p1_points(F)
    return _perm(tuple(0 if x is None else 1 + F.frobenius(x) for x in pts))


def _psl2_gens(F):
    gens = [_p1_translation(F, b) for b in F.additive_basis]
    gens.append(_p1_inversion(F))
    return gens


def _psl2_order(q):
    return q * (q - 1) * (q + 1) // math.gcd(2, q - 1)


def _build_psl2(q):
    F = gf(q)
    return _finish(
        "psl2(%d)" % q, _psl2_gens(F), q + 1, _psl2_order(q), "projective line, %d points" % (q + 1)
    )


def _build_pgl2_9():
    F = gf(9)
    gens = _psl2_gens(F) + [_p1_scaling(F, F.generator())]
    return _finish("pgl2_9", gens, 10, 720)


def _build_psigmal2_9():
    F = gf(9)
    gens = _psl2_gens(F) + [_p1_frobenius(F)]
    return _finish("psigmal2_9", gens, 10, 720)


def _build_m10():
    F = gf(9)
    twisted = _p1_scaling(F, F.generator()) * _p1_frobenius(F)
    gens = _psl2_gens(F) + [twisted]
    return _finish("m10", gens, 10, 720, "socle extension by scaling-then-frobenius")


def _build_pgammal2_9():
    F = gf(9)
    gens = _psl2_gens(F) + [_p1_scaling(F, F.generator()), _p1_frobenius(F)]
    return _finish("pgammal2_9", gens, 10, 1440)


def _build_s6_in_pgammal29():
    F = gf(9)
    socle = _psl2_gens(F)
    gens = socle + [_p1_frobenius(F)]
    built = _finish(
        "s6_in_pgammal29",
        gens,
        10,
        720,
        "the subgroup of pgammal2_9 generated by the socle and the frobenius map",
    )
    built.extras["phi"] = _p1_scaling(F, F.generator())
    built.extras["socle_generators"] = socle
    return built


# ---------------------------------------------------------------------------
# the projective plane over F4 and the groups around PSL(3, 4)


def _normalize_projective(F, vec):
    for c in vec:
        if c != 0:
            if c == 1:
                return tuple(vec)
            s = F.inv(c)
            return tuple(F.mul(s, x) for x in vec)
    raise AtlasError("zero vector cannot be normalized")


def _pg2_points(F):
    pts = set()
    for x in F.elements:
        for y in F.elements:
            for z in F.elements:
                if x or y or z:
                    pts.add(_normalize_projective(F, (x, y, z)))
    return sorted(pts)


_PG24_FIELD = gf(4)
_PG24_POINTS = _pg2_points(_PG24_FIELD)
_PG24_INDEX = {v: i for i, v in enumerate(_PG24_POINTS)}


def projective_permutation(M: Matrix, domain="points") -> Permutation:
    """Permutation a nonsingular 3x3 matrix over F4 induces on PG(2, 4).

    domain "points": the 21 projective points.  domain "points_and_lines":
    those points followed by the 21 lines, lines transforming through the
    inverse transpose.
    """
    F = M.field
    if F.q != 4 or M.n != 3:
        raise AtlasError("projective_permutation expects a 3x3 matrix over F4")
    Minv_t = M.inverse().transpose()
    point_part = [
        _PG24_INDEX[_normalize_projective(F, M.apply_row(v))] for v in _PG24_POINTS
    ]
    if domain == "points":
        return _perm(tuple(point_part))
    if domain != "points_and_lines":
        raise AtlasError("domain must be 'points' or 'points_and_lines'")
    line_part = [
        21 + _PG24_INDEX[_normalize_projective(F, Minv_t.apply_row(w))] for w in _PG24_POINTS
    ]
    return _perm(tuple(point_part + line_part))


def frobenius_collineation(domain="points") -> Permutation:
    """Coordinate-wise squaring on PG(2, 4), on points or on points and lines."""
    F = _PG24_FIELD
    part = [
        _PG24_INDEX[_normalize_projective(F, tuple(F.frobenius(c) for c in v))]
        for v in _PG24_POINTS
    ]
    if domain == "points":
        return _perm(tuple(part))
    return _perm(tuple(part + [21 + i for i in part]))


def duality_collineation() -> Permutation:
    """The polarity swapping each point with the line of the same coordinates."""
    return _perm(tuple([21 + i for i in range(21)] + list(range(21))))


def _psl34_matrix_gens():
    F = _PG24_FIELD
    a = 2
    return [
        Matrix(F, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        Matrix(F, [[1, a, 0], [0, 1, 0], [0, 0, 1]]),
        Matrix(F, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    ]


def _delta_matrix():
    return Matrix(_PG24_FIELD, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])


def _build_psl3_4():
    gens = [projective_permutation(M, "points") for M in _psl34_matrix_gens()]
    return _finish("psl3_4", gens, 21, 20160, "21 points of the projective plane over F4")


def _psl34_42_gens():
    return [projective_permutation(M, "points_and_lines") for M in _psl34_matrix_gens()]


def _build_psl34_phi_ext():
    gens = _psl34_42_gens() + [frobenius_collineation("points_and_lines")]
    return _finish("psl34_phi_ext", gens, 42, 40320, "socle extended by the field squaring")


def _build_psl34_g1():
    delta = projective_permutation(_delta_matrix(), "points_and_lines")
    gens = _psl34_42_gens() + [delta, frobenius_collineation("points_and_lines")]
    return _finish(
        "psl34_g1",
        gens,
        42,
        120960,
        "socle with the order-3 diagonal collineation and the field squaring",
    )


def _build_psl34_g2():
    delta = projective_permutation(_delta_matrix(), "points_and_lines")
    gens = _psl34_42_gens() + [delta, duality_collineation()]
    return _finish(
        "psl34_g2",
        gens,
        42,
        120960,
        "socle with the order-3 diagonal collineation and the polarity",
    )


# ---------------------------------------------------------------------------
# the Suzuki group on its 65-point ovoid


def _sz8_theta(F, x):
    return F.power(x, 4)


def _sz8_unipotent(F, a, b):
    th = lambda x: _sz8_theta(F, x)
    m = F.mul
    top = F.add(F.add(m(a, m(a, th(a))), m(a, b)), th(b))  # a^(theta+2) + ab + b^theta
    return Matrix(
        F,
        [
            [1, a, b, top],
            [0, 1, th(a), F.add(b, m(a, th(a)))],
            [0, 0, 1, a],
            [0, 0, 0, 1],
        ],
    )


def _sz8_torus(F, k):
    th1 = F.mul(k, _sz8_theta(F, k))  # k^(theta+1)
    return Matrix(F, [[1, 0, 0, 0], [0, k, 0, 0], [0, 0, th1, 0], [0, 0, 0, F.mul(k, th1)]])


def _sz8_flip(F):
    return Matrix(F, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])


def _build_sz8():
    F = gf(8)
    mats = [
        _sz8_unipotent(F, 1, 0),
        _sz8_unipotent(F, 2, 0),
        _sz8_unipotent(F, 4, 0),
        _sz8_torus(F, F.generator()),
        _sz8_flip(F),
    ]
    start = _normalize_projective(F, (1, 0, 0, 0))
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for M in mats:
                w = _normalize_projective(F, M.apply_row(v))
                if w not in orbit:
                    orbit.add(w)
                    nxt.append(w)
        frontier = nxt
    if len(orbit) != 65:
        raise AtlasError("ovoid orbit has %d points, expected 65" % len(orbit))
    pts = sorted(orbit)
    index = {v: i for i, v in enumerate(pts)}
    gens = [
        _perm(tuple(index[_normalize_projective(F, M.apply_row(v))] for v in pts)) for M in mats
    ]
    return _finish("sz8", gens, 65, 29120, "action on the 65-point ovoid over F8")


# ---------------------------------------------------------------------------
# products and the catalog


def _direct_product_group(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    degree = left.degree + right.degree
    gens = []
    for g in left.generators:
        gens.append(_perm(tuple(g.raw) + tuple(left.degree + i for i in range(right.degree))))
    for g in right.generators:
        gens.append(_perm(tuple(range(left.degree)) + tuple(left.degree + i for i in g.raw)))
    return FiniteGroup(gens, degree=degree)


def _build_direct_product(left_id, right_id):
    lb = build(left_id)
    rb = build(right_id)
    id_text = "direct_product(%s,%s)" % (lb.id_text, rb.id_text)
    prod = _direct_product_group(lb.group, rb.group)
    return _finish(
        id_text, prod.generators, prod.degree, lb.expected_order * rb.expected_order
    )


_CATALOG = {
    "cyclic": (_build_cyclic, 1),
    "elem_abelian": (_build_elem_abelian, 2),
    "dihedral": (_build_dihedral, 1),
    "q8": (_build_q8, 0),
    "sym": (_build_sym, 1),
    "alt": (_build_alt, 1),
    "s4": (lambda: _build_sym(4), 0),
    "extraspecial": (_build_extraspecial, 2),
    "sl2_3": (_build_sl2_3, 0),
    "sl2_5": (_build_sl2_5, 0),
    "sl2_9": (_build_sl2_9, 0),
    "agl1": (_build_agl1, 1),
    "asl2_4": (_build_asl2_4, 0),
    "psl2": (_build_psl2, 1),
    "psl3_4": (_build_psl3_4, 0),
    "m10": (_build_m10, 0),
    "pgl2_9": (_build_pgl2_9, 0),
    "psigmal2_9": (_build_psigmal2_9, 0),
    "pgammal2_9": (_build_pgammal2_9, 0),
    "s6_in_pgammal29": (_build_s6_in_pgammal29, 0),
    "psl34_g1": (_build_psl34_g1, 0),
    "psl34_g2": (_build_psl34_g2, 0),
    "psl34_phi_ext": (_build_psl34_phi_ext, 0),
    "sz8": (_build_sz8, 0),
    "direct_product": (_build_direct_product, 2),
}


def catalog_names():
    return sorted(_CATALOG)


def parse_atlas_id(text):
    """Parse "name" or "name(arg, ...)" into (name, [args]).

    Arguments are ints, the signs "+" and "-", or nested atlas ids (used by
    direct_product).  Nested ids stay as text.
    """
    text = text.strip()
    if not text:
        raise AtlasError("empty atlas id")
    if "(" not in text:
        if not text.isidentifier():
            raise AtlasError("malformed atlas id %r" % text)
        return text, []
    if not text.endswith(")"):
        raise AtlasError("malformed atlas id %r" % text)
    name, _, rest = text.partition("(")
    name = name.strip()
    if not name.isidentifier():
        raise AtlasError("malformed atlas id %r" % text)
    inner = rest[:-1]
    args = []
    depth = 0
    current = ""
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise AtlasError("unbalanced parentheses in %r" % text)
        if ch == "," and depth == 0:
            args.append(current.strip())
            current = ""
        else:
            current += ch
    if depth != 0:
        raise AtlasError("unbalanced parentheses in %r" % text)
    if current.strip() or args:
        args.append(current.strip())
    out = []
    for arg in args:
        if not arg:
            raise AtlasError("empty argument in %r" % text)
        if arg in ("+", "-"):
            out.append(arg)
        elif arg.lstrip("-").isdigit():
            out.append(int(arg))
        else:
            out.append(arg)  # nested id, handled by the builder
    return name, out


def build(atlas_id) -> BuiltGroup:
    """Build a cataloged group by id, either "name(args)" text or (name, args)."""
    if isinstance(atlas_id, str):
        name, args = parse_atlas_id(atlas_id)
    else:
        name, args = atlas_id
    if name not in _CATALOG:
        raise AtlasError("unknown atlas id %r" % name)
    builder, arity = _CATALOG[name]
    if len(args) != arity:
        raise AtlasError("%s expects %d parameter(s), got %d" % (name, arity, len(args)))
    return builder(*args)


# ---------------------------------------------------------------------------
# group-spec documents


def load_group_spec(document) -> FiniteGroup:
    """Build a group from a spec document.

    Either {"name", "degree", "generators": [cycle strings]} or
    {"atlas": id-name, "params": [...], "name"?: display name}.
    """
    if not isinstance(document, dict):
        raise SchemaError("group spec must be a mapping")
    if "generators" in document:
        for key in ("name", "degree"):
            if key not in document:
                raise SchemaError("explicit group spec needs %r" % key)
        degree = document["degree"]
        if not isinstance(degree, int) or degree < 1:
            raise SchemaError("degree must be a positive integer")
        gens = []
        for text in document["generators"]:
            try:
                gens.append(parse_permutation(text, degree))
            except Exception as exc:
                raise SchemaError("bad generator %r: %s" % (text, exc)) from exc
        return FiniteGroup(gens, degree=degree, name=document["name"])
    if "atlas" in document:
        params = document.get("params", [])
        if not isinstance(params, list):
            raise SchemaError("params must be a list")
        built = build((document["atlas"], params))
        group = built.group
        if "name" in document:
            group.name = document["name"]
        return group
    raise SchemaError("group spec needs either 'generators' or 'atlas'")


def load_corpus(documents) -> list[FiniteGroup]:
    if not isinstance(documents, list):
        raise SchemaError("corpus must be a list of group specs")
    return [load_group_spec(doc) for doc in documents]


# ---------------------------------------------------------------------------
# the two hand-checked computations


def reproduce_psl34_commutators() -> dict:
    """Re-run the matrix computations behind the two order-6 commutators.

    Returns {c1_order, c1_delta_commutes, g1_witness_order, c2_order,
    g2_witness_order}.  The matrix values are asserted against their known
    forms; the witness orders come from the degree-42 permutations.
    """
    F = _PG24_FIELD
    a = 2
    a2 = 3
    A1 = Matrix(F, [[1, 0, 0], [0, 1, a], [0, 0, 1]])
    A2 = Matrix(F, [[1, 0, 0], [0, a, 1], [0, 0, a2]])
    D = _delta_matrix()

    c1 = A1.inverse() * A1.frobenius()
    if c1 != Matrix(F, [[1, 0, 0], [0, 1, 1], [0, 0, 1]]):
        raise AtlasError("the frobenius commutator of A1 has the wrong matrix")
    c2 = A2.inverse() * A2.transpose().inverse()
    if c2 != Matrix(F, [[1, 0, 0], [0, a2, a], [0, a, a2]]):
        raise AtlasError("the polarity commutator of A2 has the wrong matrix")

    phi = frobenius_collineation("points_and_lines")
    beta = duality_collineation()
    x1 = projective_permutation(A1 * D, "points_and_lines")
    x2 = projective_permutation(A2 * D, "points_and_lines")
    w1 = ~x1 * ~phi * x1 * phi
    w2 = ~x2 * ~beta * x2 * beta
    return {
        "c1_order": c1.order(),
        "c1_delta_commutes": c1 * D == D * c1,
        "g1_witness_order": w1.order(),
        "c2_order": c2.order(),
        "g2_witness_order": w2.order(),
    }


def exceptional_automorphism_witness(probe_phi: Permutation | None = None):
    """Search the degree-10 model of S6 for an odd-order twisted commutator.

    With H the s6_in_pgammal29 group, A its socle and phi the designated
    element outside H, scan x in H minus A and y in A for [x, phi*y] of odd
    order greater than 1 and return (x, phi*y, order) minimizing the order,
    ties broken by scan position.  Pass probe_phi to rerun the same scan
    with a different twisting element; then None is possible.
    """
    built = build("s6_in_pgammal29")
    H = built.group
    phi = built.extras["phi"] if probe_phi is None else probe_phi
    socle = FiniteGroup(built.extras["socle_generators"], degree=10)
    a_elems = socle.elements()
    outer = [x for x in H.elements() if not socle.contains(x)]
    best = None
    for x in outer:
        xinv = ~x
        for y in a_elems:
            t = phi * y
            w = xinv * ~t * x * t
            o = w.order()
            if o > 1 and o % 2 == 1:
                if best is None or o < best[2]:
                    best = (x, t, o)
                    if o == 3:
                        return best
    return best
