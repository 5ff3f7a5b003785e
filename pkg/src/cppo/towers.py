"""Towers of p-subgroups and Fitting-height certification.

A tower is a sequence of stages (p_i, P_i): each P_i a p_i-group, earlier
stages normalizing later ones, adjacent primes distinct, and every stage
acting nontrivially "effectively": writing K_h = 1 and, going up,
K_i = { x in P_i : [P_{i+1}, x] <= K_{i+1} }, the groups P_i / K_i must all
be nontrivial.  The maximum height of a tower of a soluble group equals its
Fitting height; find_max_tower certifies that equality constructively.

Stages are small p-groups, so kernels are computed by plain double loops
over stage elements rather than anything clever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arith import factorization
from .bsgs import StabilizerChain
from .errors import InsolubleError, TowerDefectError
from .group import FiniteGroup, Subgroup, quotient_by_normal
from .permutation import (
    Permutation,
    comm_raw,
    conj_raw,
    identity_raw,
    mul_raw,
    order_raw,
    parse_permutation,
)
from .structure import (
    fitting_height,
    frattini_of_p_group,
    is_soluble,
    p_core,
    sylow_subgroup,
    upper_fitting_series,
)


class Tower:
    """An ordered list of (prime, Subgroup) stages inside one ambient group."""

    def __init__(self, ambient: FiniteGroup, stages):
        self.ambient = ambient
        self.stages = [(int(p), sub) for p, sub in stages]
        self._kernels = None

    @property
    def height(self) -> int:
        return len(self.stages)

    def stage_groups(self):
        return [sub for _, sub in self.stages]

    def _structural_check(self):
        """Items 1, 2 and 4; returns (item, message) for the first failure."""
        for idx, (p, sub) in enumerate(self.stages):
            if not self.ambient.contains_group(sub.group):
                return 2, "stage %d does not lie in the ambient group" % (idx + 1)
            n = sub.order()
            if n == 1:
                return 1, "stage %d is trivial" % (idx + 1)
            fact = factorization(n)
            if len(fact) != 1 or fact[0][0] != p:
                return 1, "stage %d is not a %d-group (order %d)" % (idx + 1, p, n)
        for i in range(len(self.stages)):
            for j in range(i + 1, len(self.stages)):
                upper = self.stages[i][1]
                lower = self.stages[j][1]
                chain = lower.group.chain()
                for g in upper.group._raw_gens:
                    for x in lower.group._raw_gens:
                        if not chain.contains_raw(conj_raw(x, g)):
                            return 2, "stage %d does not normalize stage %d" % (i + 1, j + 1)
        for i in range(len(self.stages) - 1):
            if self.stages[i][0] == self.stages[i + 1][0]:
                return 4, "stages %d and %d share the prime %d" % (
                    i + 1,
                    i + 2,
                    self.stages[i][0],
                )
        return None

    def kernels(self):
        """K_i per stage, computed from the bottom stage upward."""
        if self._kernels is None:
            defect = self._structural_check()
            if defect is not None:
                raise TowerDefectError("item %d: %s" % defect)
            ambient = self.ambient
            kernels = []
            below_elems = None
            below_kernel_chain = None
            for p, sub in reversed(self.stages):
                if below_elems is None:
                    k = ambient.trivial_subgroup()
                else:
                    kept = []
                    for x in sub.group._raw_elements():
                        if all(
                            below_kernel_chain.contains_raw(comm_raw(y, x))
                            for y in below_elems
                        ):
                            kept.append(x)
                    k = ambient._subgroup_from_raw_elements(kept)
                kernels.append(k)
                below_elems = sub.group._raw_elements()
                below_kernel_chain = k.group.chain()
            kernels.reverse()
            self._kernels = kernels
        return self._kernels

    def __repr__(self):
        return "Tower(height=%d, primes=%s)" % (self.height, [p for p, _ in self.stages])


@dataclass
class TowerValidity:
    valid: bool
    items: dict
    detail: str | None = None


@dataclass
class IrreducibilityReport:
    verdict: str  # "yes", "no" or "undecided"
    details: list = field(default_factory=list)


def effective_quotients(t: Tower) -> list:
    """The stage actions P_i / K_i as explicit coset-action groups."""
    kernels = t.kernels()
    out = []
    for (p, sub), k in zip(t.stages, kernels):
        out.append(quotient_by_normal(sub.group, k.group))
    return out


def validate_tower(t: Tower) -> TowerValidity:
    items = {1: True, 2: True, 3: True, 4: True}
    defect = t._structural_check()
    if defect is not None:
        item, message = defect
        items[item] = False
        # item 3 is unknowable without the structure; leave it optimistic
        return TowerValidity(False, items, "item %d: %s" % (item, message))
    for idx, (k, (p, sub)) in enumerate(zip(t.kernels(), t.stages)):
        if k.order() == sub.order():
            items[3] = False
            return TowerValidity(
                False, items, "item 3: stage %d acts trivially below it" % (idx + 1)
            )
    return TowerValidity(True, items)


# ---------------------------------------------------------------------------
# irreducibility


def _closure_under_conjugation(ambient, seed_raws, conjugator_raws):
    """Smallest subgroup containing the seeds closed under the given conjugators."""
    chain = StabilizerChain(ambient.degree)
    gens = []
    queue = []
    for s in seed_raws:
        if not chain.contains_raw(s):
            chain._insert(s)
            chain._schreier_sims()
            gens.append(s)
            queue.append(s)
    while queue:
        x = queue.pop(0)
        for c in conjugator_raws:
            y = conj_raw(x, c)
            if not chain.contains_raw(y):
                chain._insert(y)
                chain._schreier_sims()
                gens.append(y)
                queue.append(y)
    return ambient._subgroup_raw(gens)


def _commutator_span(ambient, action_raws, target: FiniteGroup):
    """[A, T]: generated by commutators of the action gens with target elements,
    closed under conjugation by both sides.  Lands inside the target when the
    action gens normalize it."""
    seeds = set()
    for h in action_raws:
        for y in target._raw_gens:
            c = comm_raw(h, y)
            if any(k != v for k, v in enumerate(c)):
                seeds.add(c)
    return _closure_under_conjugation(
        ambient, sorted(seeds), list(action_raws) + list(target._raw_gens)
    )


def _elementary_abelian_subgroup_gens(Q: FiniteGroup, p: int, exhaustive: bool):
    """Generator lists for elementary abelian subgroups of Q, smallest first.

    Exhaustive enumeration below the size cap; otherwise combinations of at
    most three commuting order-p elements drawn from the least elements.
    """
    elems = Q._raw_elements()
    order_p = [x for x in elems if order_raw(x) == p]
    ident = identity_raw(Q.degree)
    if exhaustive:
        seen = {frozenset([ident]): []}
        frontier = [(frozenset([ident]), [])]
        out = [[]]
        while frontier:
            new_frontier = []
            for members, gens in frontier:
                for x in order_p:
                    if x in members:
                        continue
                    if any(mul_raw(x, s) != mul_raw(s, x) for s in gens):
                        continue
                    powers = [ident]
                    y = x
                    while y != ident:
                        powers.append(y)
                        y = mul_raw(y, x)
                    grown = frozenset(mul_raw(m, q) for m in members for q in powers)
                    if grown not in seen:
                        seen[grown] = gens + [x]
                        new_frontier.append((grown, gens + [x]))
                        out.append(gens + [x])
            frontier = new_frontier
        out.sort(key=lambda g: (p ** len(g), g))
        return out, True
    pool = order_p[:48]
    seen_sets = set()
    out = []
    for size in (1, 2, 3):
        for combo in itertools.combinations(pool, size):
            if any(
                mul_raw(a, b) != mul_raw(b, a) for a, b in itertools.combinations(combo, 2)
            ):
                continue
            sub = FiniteGroup([Permutation._from_raw(c) for c in combo], degree=Q.degree)
            if sub.order() != p**size:
                continue  # not independent, a smaller combo already covers it
            key = frozenset(sub._raw_elements())
            if key not in seen_sets:
                seen_sets.add(key)
                out.append(list(combo))
    return out, len(order_p) <= len(pool)


def is_irreducible_tower(t: Tower, elementary_cap: int = 256) -> IrreducibilityReport:
    """Check the four irreducibility conditions on a valid tower."""
    report = validate_tower(t)
    if not report.valid:
        raise TowerDefectError("irreducibility applies to valid towers only: %s" % report.detail)
    kernels = t.kernels()
    quotients = effective_quotients(t)
    details = []
    undecided = False

    # (2) the top stage is cyclic with effective action of prime order
    p1, top = t.stages[0]
    if not top.group.is_cyclic():
        return IrreducibilityReport("no", ["item 2: the top stage is not cyclic"])
    if quotients[0].order() != p1:
        return IrreducibilityReport(
            "no", ["item 2: the top stage acts with order %d, not prime" % quotients[0].order()]
        )

    for i, ((p, sub), q) in enumerate(zip(t.stages, quotients)):
        # (1) frattini conditions on the effective stage
        frat = frattini_of_p_group(q)
        if frattini_of_p_group(frat.group).order() != 1:
            return IrreducibilityReport(
                "no", ["item 1: stage %d has a frattini subgroup that is not elementary" % (i + 1)]
            )
        centre = q.center()
        if not centre.group.contains_group(frat.group):
            return IrreducibilityReport(
                "no", ["item 1: stage %d frattini subgroup is not central" % (i + 1)]
            )
        if p != 2 and q.order() > 1 and q.exponent() != p:
            return IrreducibilityReport(
                "no", ["item 1: stage %d has exponent %d, wanted %d" % (i + 1, q.exponent(), p)]
            )
        if i > 0:
            above = t.stages[i - 1][1]
            k_chain = kernels[i].group.chain()
            for fgen in frat.group.generators:
                lift = q.lift(fgen).raw
                for g in above.group._raw_gens:
                    if not k_chain.contains_raw(comm_raw(lift, g)):
                        return IrreducibilityReport(
                            "no",
                            [
                                "item 1: stage %d does not centralize the frattini "
                                "subgroup of stage %d" % (i, i + 1)
                            ],
                        )

    for i in range(1, len(t.stages)):
        # (3) an elementary abelian chunk of the stage above covers this stage
        p, sub = t.stages[i]
        q_above = quotients[i - 1]
        p_above = t.stages[i - 1][0]
        stage_chain = sub.group.chain()
        k_gens = kernels[i].group._raw_gens

        def covers(action_raws):
            span = _commutator_span(t.ambient, action_raws, sub.group)
            joined = t.ambient._subgroup_raw(span.group._raw_gens + list(k_gens))
            return joined.order() == sub.order()

        full_gens = [q_above.lift(g).raw for g in q_above.generators]
        if not covers(full_gens):
            return IrreducibilityReport(
                "no",
                ["item 3: even the whole stage %d fails to cover stage %d" % (i, i + 1)],
            )
        exhaustive = q_above.order() < elementary_cap
        candidates, complete = _elementary_abelian_subgroup_gens(
            q_above, p_above, exhaustive
        )
        hit = None
        for cand in candidates:
            if not cand:
                continue
            lifted = [q_above.lift(Permutation._from_raw(c)).raw for c in cand]
            if covers(lifted):
                hit = cand
                break
        if hit is None:
            if complete:
                return IrreducibilityReport(
                    "no",
                    ["item 3: no elementary abelian subgroup above covers stage %d" % (i + 1)],
                )
            undecided = True
            details.append(
                "item 3: stage %d search capped before finding a cover" % (i + 1)
            )

    for i, ((p, sub), q) in enumerate(zip(t.stages, quotients)):
        # (4) invariant closures of elements outside the frattini preimage fill the stage
        frat = frattini_of_p_group(q)
        pre_gens = list(kernels[i].group._raw_gens)
        for fgen in frat.group.generators:
            pre_gens.append(q.lift(fgen).raw)
        pre = t.ambient._subgroup_raw(pre_gens)
        pre_chain = pre.group.chain()
        conjugators = []
        for j in range(i):
            conjugators.extend(t.stages[j][1].group._raw_gens)
        for x in sub.group._raw_elements():
            if pre_chain.contains_raw(x):
                continue
            closure = _closure_under_conjugation(t.ambient, [x], conjugators)
            if closure.order() != sub.order():
                return IrreducibilityReport(
                    "no",
                    [
                        "item 4: stage %d has a proper invariant subgroup outside "
                        "the frattini preimage" % (i + 1)
                    ],
                )

    if undecided:
        return IrreducibilityReport("undecided", details)
    return IrreducibilityReport("yes", details)


# ---------------------------------------------------------------------------
# containment


def tower_contains(t_small: Tower, t_big: Tower) -> bool:
    """Whether an increasing stage injection embeds t_small into t_big."""
    if t_small.ambient is not t_big.ambient and not (
        t_small.ambient.same_group_as(t_big.ambient)
    ):
        return False
    n, m = t_small.height, t_big.height
    if n > m:
        return False

    def fits(i, j):
        sub = t_small.stages[i][1]
        big = t_big.stages[j][1]
        chain = big.group.chain()
        return all(chain.contains_raw(g) for g in sub.group._raw_gens)

    # table[i][j]: can stages i.. of the small tower go into stages j.. of the big
    table = [[False] * (m + 1) for _ in range(n + 1)]
    for j in range(m + 1):
        table[n][j] = True
    for i in range(n - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            table[i][j] = table[i][j + 1] or (fits(i, j) and table[i + 1][j + 1])
    return table[0][0]


# ---------------------------------------------------------------------------
# quotient image of a tower


def quotient_tower(t: Tower, q) -> Tower:
    """The image of the stages under a quotient projection of the ambient group."""
    stages = []
    for p, sub in t.stages:
        gens = [q.project(g) for g in sub.group.generators]
        stages.append((p, q.subgroup([g for g in gens if not g.is_identity()] or gens)))
    return Tower(q, stages)


# ---------------------------------------------------------------------------
# searching for towers


def _all_subgroups(P: FiniteGroup):
    """Every subgroup of a small group, by cyclic extension, sorted by size."""
    elems = P._raw_elements()
    ident = identity_raw(P.degree)
    seen = {frozenset([ident]): []}
    frontier = [(frozenset([ident]), [])]
    while frontier:
        new_frontier = []
        for members, gens in frontier:
            for x in elems:
                if x in members:
                    continue
                grown_gens = gens + [x]
                sub = FiniteGroup(
                    [Permutation._from_raw(g) for g in grown_gens], degree=P.degree
                )
                key = frozenset(sub._raw_elements())
                if key not in seen:
                    seen[key] = grown_gens
                    new_frontier.append((key, grown_gens))
        frontier = new_frontier
    out = sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    return out


def _p_subgroup_candidates(G: FiniteGroup, p: int):
    """All nontrivial p-subgroups of G: subgroups of one Sylow group plus
    their conjugates under the group generators."""
    syl = sylow_subgroup(G, p)
    if syl.order() == 1:
        return []
    subs = _all_subgroups(syl.group)
    pool = {}
    for members, gens in subs:
        if len(members) > 1:
            pool[members] = gens
    queue = list(pool.items())
    while queue:
        members, gens = queue.pop(0)
        for g in G._raw_gens:
            conj_gens = [conj_raw(x, g) for x in gens]
            key = frozenset(conj_raw(x, g) for x in members)
            if key not in pool:
                pool[key] = conj_gens
                queue.append((key, conj_gens))
    ordered = sorted(pool.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    return [G._subgroup_raw(gens) for _, gens in ordered]


def tower_probe(G: FiniteGroup, min_height: int, order_cap: int = 500):
    """Bounded exhaustive search for a valid tower of at least the given height.

    Stage candidates are the p-subgroups of G.  Intended as a falsification
    oracle on small groups, not a production search; groups above the order
    cap are refused.
    """
    if G.order() > order_cap:
        raise TowerDefectError(
            "tower probe is limited to groups of order at most %d" % order_cap
        )
    primes = [p for p, _ in factorization(G.order())]
    if min_height <= 0:
        return Tower(G, [])
    candidates = {p: _p_subgroup_candidates(G, p) for p in primes}

    def extend(stages):
        if len(stages) == min_height:
            t = Tower(G, list(stages))
            if validate_tower(t).valid:
                return t
            return None
        last_prime = stages[-1][0] if stages else None
        for p in primes:
            if p == last_prime:
                continue
            for cand in candidates[p]:
                ok = True
                for _, above in stages:
                    chain = cand.group.chain()
                    for g in above.group._raw_gens:
                        for x in cand.group._raw_gens:
                            if not chain.contains_raw(conj_raw(x, g)):
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                found = extend(stages + [(p, cand)])
                if found is not None:
                    return found
        return None

    return extend([])


def find_max_tower(G: FiniteGroup):
    """A tower whose height equals the Fitting height, with that height.

    Stages are assembled bottom-up along the upper Fitting series: the
    bottom stage is a core O_q(G), and each later stage is a Sylow subgroup
    of the pulled-back q-core of the quotient, conjugated until it
    normalizes everything chosen so far.  Prime choices per level are
    backtracked over; if no assignment produces a valid tower the bounded
    exhaustive probe has the last word.
    """
    if not is_soluble(G):
        raise InsolubleError("towers certify fitting height for soluble groups only")
    series = upper_fitting_series(G)
    h = len(series.terms) - 1
    if h == 0:
        return 0, Tower(G, [])
    factor_primes = []
    for lvl in range(1, h + 1):
        below = series.terms[lvl - 1].order()
        here = series.terms[lvl].order()
        factor_primes.append([p for p, _ in factorization(here // below)])

    def assignments(level, chosen):
        if level == h:
            yield list(chosen)
            return
        for p in factor_primes[level]:
            if chosen and chosen[-1] == p:
                continue
            chosen.append(p)
            yield from assignments(level + 1, chosen)
            chosen.pop()

    for primes in assignments(0, []):
        stages_bottom_up = []
        good = True
        for lvl in range(1, h + 1):
            p = primes[lvl - 1]
            if lvl == 1:
                stage = p_core(G, p)
            else:
                below_term = series.terms[lvl - 1]
                q = quotient_by_normal(G, below_term)
                core = p_core(q, p)
                pre_gens = list(below_term.group._raw_gens)
                for g in core.group.generators:
                    pre_gens.append(q.lift(g).raw)
                u = FiniteGroup(
                    [Permutation._from_raw(r) for r in sorted(set(pre_gens))],
                    degree=G.degree,
                    cap=G.cap,
                )
                stage = _pick_stage(G, u, p, stages_bottom_up)
                if stage is None:
                    good = False
                    break
            stages_bottom_up.append((p, stage))
        if not good:
            continue
        tower = Tower(G, list(reversed(stages_bottom_up)))
        if tower.height == h and validate_tower(tower).valid:
            return h, tower

    if G.order() <= 500:
        probed = tower_probe(G, h)
        if probed is not None:
            return h, probed
    raise TowerDefectError("no tower realizing fitting height %d was found" % h)


def tower_to_data(t: Tower) -> list:
    """Stage list as (prime, generator cycle strings), for reports."""
    return [
        [p, [str(g) for g in sub.group.generators]] for p, sub in t.stages
    ]


def tower_from_data(ambient: FiniteGroup, data) -> Tower:
    stages = []
    for p, gen_strs in data:
        gens = [parse_permutation(s, degree=ambient.degree) for s in gen_strs]
        stages.append((int(p), ambient.subgroup(gens)))
    return Tower(ambient, stages)


def _normalizes_all(gens, chosen) -> bool:
    for _, lower in chosen:
        lchain = lower.group.chain()
        for g in gens:
            for x in lower.group._raw_gens:
                if not lchain.contains_raw(conj_raw(x, g)):
                    return False
    return True


def _moves_stage_below(gens, chosen) -> bool:
    """A stage whose generators all centralize the stage below acts trivially
    on it; such a candidate can never pass validation."""
    if not chosen:
        return True
    below = chosen[-1][1]
    ident = identity_raw(below.parent.degree)
    for g in gens:
        for x in below.group._raw_gens:
            if comm_raw(x, g) != ident:
                return True
    return False


def _pick_stage(G, u: FiniteGroup, p: int, chosen):
    """First p-subgroup of u that normalizes every chosen stage and moves the
    one directly below: full Sylow conjugates are tried before smaller ones."""
    syl = sylow_subgroup(u, p)
    base_gens = syl.group._raw_gens
    tried = set()
    for conj_by in u._raw_elements():
        gens = tuple(sorted(conj_raw(g, conj_by) for g in base_gens))
        if gens in tried:
            continue
        tried.add(gens)
        if _normalizes_all(gens, chosen) and _moves_stage_below(gens, chosen):
            return G._subgroup_raw(list(gens))
    for cand in sorted(_p_subgroup_candidates(u, p), key=lambda s: -s.order()):
        gens = cand.group._raw_gens
        if _normalizes_all(gens, chosen) and _moves_stage_below(gens, chosen):
            return G._subgroup_raw(list(gens))
    return None
