"""Link diagrams from PD codes: orientation, signs, faces, Seifert circles,
positivity classes and diagrammatic invariants.

PD convention.  ``X(a, b, c, d)`` lists the four arc ends counterclockwise,
starting at the incoming under-strand, so the under-strand runs ``a -> c``.
The crossing is positive when the over-strand runs ``b -> d`` and negative
when it runs ``d -> b``.  With this reading the standard right trefoil
``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` has writhe +3.

Internally a crossing is the 5-tuple ``(a, b, c, d, sign)``: for ``sign = +1``
the over-strand enters at ``b`` and leaves at ``d``; for ``sign = -1`` it
enters at ``d`` and leaves at ``b``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

Crossing = tuple[int, int, int, int, int]


class DiagramError(ValueError):
    """Raised for malformed, non-planar or unsupported diagrams."""


# ---------------------------------------------------------------------------
# PD codes


@dataclass(frozen=True)
class PdCode:
    """Raw PD code.  ``loops`` counts crossingless unknotted components and is
    only ever nonzero for the 0-crossing unknot."""

    crossings: tuple[tuple[int, int, int, int], ...]
    loops: int = 0

    def __str__(self) -> str:
        if not self.crossings:
            return "unknot"
        return " ".join("X(%d,%d,%d,%d)" % x for x in self.crossings)


_X_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_pd(text: str) -> PdCode:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms, with optional ``pd:``
    header.  The single word ``unknot`` gives the 0-crossing unknot."""
    body = _strip_comments(text).strip()
    if body.lower().startswith("pd:"):
        body = body[3:].strip()
    if not body:
        raise DiagramError("empty diagram")
    if body.lower() == "unknot":
        return PdCode((), 1)
    crossings = []
    pos = 0
    for m in _X_RE.finditer(body):
        if body[pos:m.start()].strip():
            raise DiagramError(f"syntax error near {body[pos:m.start()].strip()[:20]!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if body[pos:].strip():
        raise DiagramError(f"syntax error near {body[pos:].strip()[:20]!r}")
    pd = PdCode(tuple(crossings))
    validate_pd(pd)
    return pd


def validate_pd(pd: PdCode) -> None:
    """Check label multiplicity, connectivity and planarity."""
    if not pd.crossings:
        if pd.loops != 1:
            raise DiagramError("a crossingless diagram must be a single unknot")
        return
    if pd.loops:
        raise DiagramError("free loops next to crossings make the diagram split")
    counts: dict[int, int] = {}
    for x in pd.crossings:
        for lab in x:
            if lab <= 0:
                raise DiagramError(f"arc label {lab} is not positive")
            counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, k in counts.items() if k != 2)
    if bad:
        raise DiagramError(f"arc label {bad[0]} appears {counts[bad[0]]} times, expected 2")
    if not _connected(pd.crossings):
        raise DiagramError("diagram is disconnected")
    nfaces = len(trace_faces(pd.crossings))
    if nfaces != len(pd.crossings) + 2:
        raise DiagramError(
            f"non-planar rotation system: V - E + F = {nfaces - len(pd.crossings)}, expected 2"
        )


def _connected(crossings: Sequence[Sequence[int]]) -> bool:
    if not crossings:
        return True
    where: dict[int, list[int]] = {}
    for i, x in enumerate(crossings):
        for lab in x[:4]:
            where.setdefault(lab, []).append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for lab in crossings[i][:4]:
            for j in where[lab]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(crossings)


def _slots(crossings: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int]]]:
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for p in range(4):
            where.setdefault(x[p], []).append((i, p))
    return where


def trace_faces(crossings: Sequence[Sequence[int]]) -> list[tuple[tuple[int, int], ...]]:
    """Faces of the rotation system as cycles of ``(crossing, corner)``.

    Corner ``k`` of a crossing lies between positions ``k`` and ``k + 1``.
    """
    where = _slots(crossings)
    seen: set[tuple[int, int]] = set()
    faces = []
    for i in range(len(crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            face = []
            cur = (i, p)
            while cur not in seen:
                seen.add(cur)
                lab = crossings[cur[0]][cur[1]]
                a, b = where[lab]
                j, q = b if a == cur else a
                corner = (q - 1) % 4
                face.append((j, corner))
                cur = (j, corner)
            faces.append(tuple(face))
    return faces


# ---------------------------------------------------------------------------
# Oriented diagrams


def _over_in(x: Crossing) -> int:
    return x[1] if x[4] > 0 else x[3]


def _over_out(x: Crossing) -> int:
    return x[3] if x[4] > 0 else x[1]


def out_labels(x: Crossing) -> tuple[int, int]:
    """Outgoing labels ``(under, over)``."""
    return x[2], _over_out(x)


def in_labels(x: Crossing) -> tuple[int, int]:
    """Incoming labels ``(under, over)``."""
    return x[0], _over_in(x)


def to_spec_tuple(x: Crossing) -> tuple[int, int, int, int]:
    return x[:4]


def orient(pd: PdCode) -> tuple[tuple[Crossing, ...], tuple[tuple[int, ...], ...]]:
    """Assign crossing signs and list components as label cycles in travel order.

    Under-strands fix the direction of every component they lie on.  A
    component that only ever passes over is oriented by label succession when
    it has three or more labels, otherwise so that its first crossing reads
    ``b -> d``.
    """
    xs = pd.crossings
    where = _slots(xs)
    comp_of: dict[int, int] = {}
    comp_labels: list[list[int]] = []
    for lab in sorted(where):
        if lab in comp_of:
            continue
        cyc: list[int] = []
        i, p = where[lab][0]
        cur = lab
        while cur not in comp_of:
            comp_of[cur] = len(comp_labels)
            cyc.append(cur)
            q = (p + 2) % 4
            cur = xs[i][q]
            e1, e2 = where[cur]
            i, p = e2 if e1 == (i, q) else e1
        comp_labels.append(cyc)

    # direction: head slot of every label
    head: dict[int, tuple[int, int]] = {}
    for ci, labels in enumerate(comp_labels):
        fixed = None
        for i, x in enumerate(xs):
            if comp_of[x[0]] == ci:
                fixed = (i, 0)
                break
        if fixed is None and len(labels) >= 3:
            fixed = _succession_seed(xs, where, labels)
        if fixed is None:
            for i, x in enumerate(xs):
                if comp_of[x[1]] == ci:
                    fixed = (i, 1)
                    break
        _propagate(xs, where, fixed, head)
    out = []
    for i, x in enumerate(xs):
        if head[x[0]] != (i, 0) or head[x[2]] == (i, 2):
            raise DiagramError(f"inconsistent orientation at crossing {i}")
        if head[x[1]] == (i, 1):
            sign = 1
        elif head[x[3]] == (i, 3):
            sign = -1
        else:
            raise DiagramError(f"inconsistent orientation at crossing {i}")
        out.append((x[0], x[1], x[2], x[3], sign))
    ordered = tuple(tuple(_travel(out, where, labels[0], head)) for labels in comp_labels)
    for labels in ordered:
        _check_succession(labels)
    return tuple(out), ordered


def _succession_seed(xs, where, labels):
    lo = min(labels)
    nxt = lo + 1
    for i, p in where[lo]:
        q = (p + 2) % 4
        if xs[i][q] == nxt:
            return (i, p)
    raise DiagramError(f"labels of component containing {lo} are not consecutive")


def _propagate(xs, where, start, head):
    """Walk a component from the head slot ``start`` and record heads."""
    i, p = start
    while True:
        lab = xs[i][p]
        if lab in head and head[lab] != (i, p):
            raise DiagramError(f"inconsistent orientation on arc {lab}")
        if lab in head:
            return
        head[lab] = (i, p)
        q = (p + 2) % 4
        nxt = xs[i][q]
        e1, e2 = where[nxt]
        i, p = e2 if e1 == (i, q) else e1


def _travel(out, where, start, head):
    labels = []
    lab = start
    while True:
        labels.append(lab)
        i, p = head[lab]
        nxt = out[i][(p + 2) % 4]
        if nxt == start:
            return labels
        lab = nxt


def _check_succession(labels: Sequence[int]) -> None:
    n = len(labels)
    if n < 3:
        return
    lo = min(labels)
    k = labels.index(lo)
    rot = list(labels[k:]) + list(labels[:k])
    if rot != list(range(lo, lo + n)):
        raise DiagramError(
            f"arc labels are not consecutive along the component starting at {lo}"
        )


@dataclass(frozen=True)
class OrientedDiagram:
    """A PD code with orientation, crossing signs, components and faces."""

    pd: PdCode
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x[4] for x in self.crossings)

    @property
    def c_plus(self) -> int:
        return sum(1 for x in self.crossings if x[4] > 0)

    @property
    def c_minus(self) -> int:
        return sum(1 for x in self.crossings if x[4] < 0)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.pd.loops


def build_diagram(pd: PdCode) -> OrientedDiagram:
    validate_pd(pd)
    if not pd.crossings:
        return OrientedDiagram(pd, (), (), ((), ()))
    crossings, comps = orient(pd)
    faces = tuple(trace_faces(pd.crossings))
    return OrientedDiagram(pd, crossings, comps, faces)


def diagram_from_text(text: str) -> OrientedDiagram:
    """Parse a PD code or a ``braid n: ...`` line into an oriented diagram."""
    body = _strip_comments(text).strip()
    if body.lower().startswith("braid"):
        return build_diagram(braid_closure(parse_braid(body)))
    return build_diagram(parse_pd(body))


def from_oriented(crossings: Iterable[Crossing]) -> OrientedDiagram:
    """Build a diagram from internal 5-tuples with arbitrary labels, keeping
    their orientation."""
    xs = relabel(list(crossings))
    if not xs:
        return build_diagram(PdCode((), 1))
    pd = PdCode(tuple(x[:4] for x in xs))
    validate_pd(pd)
    head = {}
    for i, x in enumerate(xs):
        head[x[0]] = (i, 0)
        head[_over_in(x)] = (i, 1 if x[4] > 0 else 3)
    comps = []
    seen: set[int] = set()
    for lab in sorted(head):
        if lab not in seen:
            comp = _travel(xs, None, lab, head)
            seen.update(comp)
            comps.append(tuple(comp))
    return OrientedDiagram(pd, tuple(xs), tuple(comps), tuple(trace_faces(pd.crossings)))


def relabel(crossings: Sequence[tuple]) -> list[Crossing]:
    """Relabel arcs ``1..2c`` consecutively along each component.

    Input crossings are ``(a, b, c, d, sign)`` with hashable labels each
    appearing exactly twice.  Components are numbered in order of first
    appearance when scanning crossings and slots.
    """
    head: dict[Hashable, tuple[int, int]] = {}
    for i, x in enumerate(crossings):
        head[x[0]] = (i, 0)
        head[x[1] if x[4] > 0 else x[3]] = (i, 1 if x[4] > 0 else 3)
    new: dict[Hashable, int] = {}
    nxt = 1
    for x in crossings:
        for lab in x[:4]:
            if lab in new:
                continue
            cur = lab
            while cur not in new:
                new[cur] = nxt
                nxt += 1
                i, p = head[cur]
                cur = crossings[i][(p + 2) % 4]
    return [(new[x[0]], new[x[1]], new[x[2]], new[x[3]], x[4]) for x in crossings]


def mirror(d: OrientedDiagram) -> OrientedDiagram:
    """Switch every crossing."""
    return from_oriented(switch(x) for x in d.crossings)


def switch(x: Crossing) -> Crossing:
    a, b, c, d, s = x
    if s > 0:
        return (b, c, d, a, -1)
    return (d, a, b, c, 1)


# ---------------------------------------------------------------------------
# Braids


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DiagramError("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) >= self.n:
                raise DiagramError(f"generator {g} out of range for {self.n} strands")

    def __str__(self) -> str:
        return f"braid {self.n}: " + " ".join(str(g) for g in self.letters)


def parse_braid(text: str) -> BraidWord:
    m = re.fullmatch(r"\s*braid\s+(\d+)\s*:\s*([-\d\s]*)", _strip_comments(text).strip())
    if not m:
        raise DiagramError("syntax error in braid word")
    try:
        letters = tuple(int(t) for t in m.group(2).split())
    except ValueError as exc:
        raise DiagramError("syntax error in braid word") from exc
    return BraidWord(int(m.group(1)), letters)


def braid_closure(b: BraidWord) -> PdCode:
    """PD code of the closure.  Strands run upward; position 1 is leftmost."""
    if not b.letters:
        if b.n != 1:
            raise DiagramError("closure of the empty braid on several strands is split")
        return PdCode((), 1)
    counter = iter(range(10**9))
    bottom = [next(counter) for _ in range(b.n)]
    cur = list(bottom)
    raw = []
    for g in b.letters:
        i = abs(g) - 1
        left, right = cur[i], cur[i + 1]
        new_left, new_right = next(counter), next(counter)
        if g > 0:
            # under-strand goes bottom-left to top-right
            raw.append((left, right, new_right, new_left, 1))
        else:
            # under-strand goes bottom-right to top-left
            raw.append((right, new_right, new_left, left, -1))
        cur[i], cur[i + 1] = new_left, new_right
    ident = {top: bot for top, bot in zip(cur, bottom)}
    raw = [tuple(ident.get(lab, lab) for lab in x[:4]) + (x[4],) for x in raw]
    xs = relabel(raw)
    pd = PdCode(tuple(x[:4] for x in xs))
    validate_pd(pd)
    return pd


# ---------------------------------------------------------------------------
# Seifert circles


class _UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent = {x: x for x in items}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class SeifertDecomposition:
    """Seifert circles as label cycles, the signed Seifert graph and nesting.

    ``edges[i] = (circle_a, circle_b, sign)`` for crossing ``i``.
    ``parent[k]`` is the circle directly enclosing circle ``k`` (``None`` at
    top level) when the face ``outer_face`` is taken as unbounded.
    ``circle_regions[k]`` gives the (inside, outside) smoothed regions.
    """

    circles: tuple[tuple[int, ...], ...]
    circle_of: dict[int, int] = field(repr=False)
    edges: tuple[tuple[int, int, int], ...]
    parent: tuple[int | None, ...]
    outer_face: int
    region_of_face: tuple[int, ...] = field(repr=False)
    circle_regions: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def s(self) -> int:
        return len(self.circles)


def seifert_decompose(d: OrientedDiagram, outer_face: int | None = None) -> SeifertDecomposition:
    if d.c == 0:
        return SeifertDecomposition(((),), {}, (), (None,), 0, (0, 1), ((0, 1),))
    head = {}
    for i, x in enumerate(d.crossings):
        head[x[0]] = i
        head[_over_in(x)] = i
    succ = {}
    for i, x in enumerate(d.crossings):
        succ[x[0]] = _over_out(x)
        succ[_over_in(x)] = x[2]
    circle_of: dict[int, int] = {}
    circles = []
    for lab in sorted(succ):
        if lab in circle_of:
            continue
        cyc = []
        cur = lab
        while cur not in circle_of:
            circle_of[cur] = len(circles)
            cyc.append(cur)
            cur = succ[cur]
        circles.append(tuple(cyc))
    edges = tuple((circle_of[x[0]], circle_of[_over_in(x)], x[4]) for x in d.crossings)

    # smoothed regions: union faces merged at each crossing
    face_at = {}
    for fi, face in enumerate(d.faces):
        for i, k in face:
            face_at[(i, k)] = fi
    uf = _UnionFind(range(len(d.faces)))
    for i, x in enumerate(d.crossings):
        if x[4] > 0:
            uf.union(face_at[(i, 0)], face_at[(i, 2)])
        else:
            uf.union(face_at[(i, 1)], face_at[(i, 3)])
    roots = sorted({uf.find(f) for f in range(len(d.faces))})
    rid = {r: k for k, r in enumerate(roots)}
    region_of_face = tuple(rid[uf.find(f)] for f in range(len(d.faces)))

    # regions on either side of each circle: look at the face to the left
    # and right of the first arc of the circle
    left_face, right_face = _arc_side_faces(d)
    circle_regions = []
    for cyc in circles:
        lab = cyc[0]
        circle_regions.append((region_of_face[left_face[lab]], region_of_face[right_face[lab]]))

    if outer_face is None:
        outer_face = max(range(len(d.faces)), key=lambda f: (len(d.faces[f]), -f))
    root_region = region_of_face[outer_face]
    parent = _nesting(circle_regions, root_region, len(roots))
    return SeifertDecomposition(
        tuple(circles), circle_of, edges, parent, outer_face, region_of_face, tuple(circle_regions)
    )


def _arc_side_faces(d: OrientedDiagram) -> tuple[dict[int, int], dict[int, int]]:
    """Faces to the left and right of every oriented arc.

    At the tail slot ``p`` of an arc, the face at corner ``p`` lies to its
    left (corners run counterclockwise) and the face at corner ``p - 1`` to
    its right.
    """
    face_at = {}
    for fi, face in enumerate(d.faces):
        for i, k in face:
            face_at[(i, k)] = fi
    left, right = {}, {}
    for i, x in enumerate(d.crossings):
        tails = [(x[2], 2), (_over_out(x), 3 if x[4] > 0 else 1)]
        for lab, p in tails:
            left[lab] = face_at[(i, p)]
            right[lab] = face_at[(i, (p - 1) % 4)]
    return left, right


def _nesting(circle_regions, root_region, nregions) -> tuple[int | None, ...]:
    adj: dict[int, list[int]] = {r: [] for r in range(nregions)}
    for k, (ra, rb) in enumerate(circle_regions):
        adj[ra].append(k)
        adj[rb].append(k)
    parent: list[int | None] = [None] * len(circle_regions)
    region_parent_circle: dict[int, int | None] = {root_region: None}
    stack = [root_region]
    done = set()
    while stack:
        r = stack.pop()
        for k in adj[r]:
            if k in done:
                continue
            done.add(k)
            parent[k] = region_parent_circle[r]
            ra, rb = circle_regions[k]
            other = rb if ra == r else ra
            if other in region_parent_circle:
                raise DiagramError("Seifert circles do not form a planar nesting")
            region_parent_circle[other] = k
            stack.append(other)
    return tuple(parent)


def circle_inside_region(seif: SeifertDecomposition, k: int) -> int:
    """The smoothed region enclosed by circle ``k`` for the chosen outer face."""
    ra, rb = seif.circle_regions[k]
    return rb if _region_depth_parent(seif, k, ra) else ra


def _region_depth_parent(seif, k, region) -> bool:
    # region is the outside of k iff it is the inside of k's parent or the root
    p = seif.parent[k]
    if p is None:
        return region == seif.region_of_face[seif.outer_face]
    pa, pb = seif.circle_regions[p]
    return region in (pa, pb)


# ---------------------------------------------------------------------------
# Invariants


def canonical_genus(d: OrientedDiagram) -> tuple[int, int]:
    """Return ``(g3(D), chi)`` of the surface from Seifert's algorithm."""
    if d.c and not _connected(d.pd.crossings):
        raise DiagramError("diagram is disconnected")
    s = seifert_decompose(d).s
    chi = s - d.c
    twice = 2 - d.n_components - chi
    return twice // 2, chi


class Positivity(enum.Enum):
    POSITIVE = "Positive"
    P1 = "AlmostPositiveP1"
    P2 = "AlmostPositiveP2"
    OTHER = "Other"


@dataclass(frozen=True)
class PositivityClass:
    kind: Positivity
    negative: int | None = None
    circles: tuple[int, int] | None = None
    partners: tuple[int, ...] = ()

    def __str__(self) -> str:
        return self.kind.value


def classify(d: OrientedDiagram, seif: SeifertDecomposition | None = None) -> PositivityClass:
    if d.c_minus == 0:
        return PositivityClass(Positivity.POSITIVE)
    if d.c_minus > 1:
        return PositivityClass(Positivity.OTHER)
    seif = seif or seifert_decompose(d)
    neg = next(i for i, x in enumerate(d.crossings) if x[4] < 0)
    a, b, _ = seif.edges[neg]
    pair = (min(a, b), max(a, b))
    partners = tuple(
        i for i, (p, q, s) in enumerate(seif.edges) if s > 0 and (min(p, q), max(p, q)) == pair
    )
    kind = Positivity.P2 if partners else Positivity.P1
    return PositivityClass(kind, neg, pair, partners)


def genus_estimate(d: OrientedDiagram, cls: PositivityClass) -> int | None:
    """``2 g3(K)`` determined by the diagram, or ``None`` when unknown."""
    if d.n_components != 1:
        raise DiagramError("genus estimate needs a knot diagram")
    if cls.kind is Positivity.OTHER:
        return None
    g, _ = canonical_genus(d)
    if cls.kind is Positivity.P2:
        return 2 * g - 2
    return 2 * g


def _inertia(matrix: list[list[Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by congruence diagonalisation."""
    a = [row[:] for row in matrix]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j gives a nonzero diagonal 2 a[i][j]
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


def _face_colours(d: OrientedDiagram) -> list[int]:
    """Checkerboard colouring of faces, 0 or 1, face 0 gets colour 0."""
    face_at = {}
    for fi, face in enumerate(d.faces):
        for i, k in face:
            face_at[(i, k)] = fi
    colour = {0: 0}
    stack = [0]
    while stack:
        f = stack.pop()
        for i, k in d.faces[f]:
            for nk in ((k + 1) % 4, (k - 1) % 4):
                g = face_at[(i, nk)]
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
                elif colour[g] == colour[f]:
                    raise DiagramError("faces are not two-colourable")
    return [colour[f] for f in range(len(d.faces))]


def goeritz_signature(d: OrientedDiagram, white: int) -> int:
    """Signature through the Gordon-Litherland formula with faces of colour
    ``white`` spanning the Goeritz lattice."""
    colours = _face_colours(d)
    face_at = {}
    for fi, face in enumerate(d.faces):
        for i, k in face:
            face_at[(i, k)] = fi
    whites = [f for f in range(len(d.faces)) if colours[f] == white]
    idx = {f: n for n, f in enumerate(whites)}
    m = len(whites)
    g = [[Fraction(0)] * m for _ in range(m)]
    mu = 0
    for i, x in enumerate(d.crossings):
        eta = 1 if colours[face_at[(i, 0)]] == white else -1
        w1, w2 = face_at[(i, 0 if eta > 0 else 1)], face_at[(i, 2 if eta > 0 else 3)]
        if w1 != w2:
            p, q = idx[w1], idx[w2]
            g[p][q] += eta
            g[q][p] += eta
            g[p][p] -= eta
            g[q][q] -= eta
        # the oriented smoothing merges corners 0,2 when positive, 1,3 otherwise
        merges_white = (x[4] > 0) == (eta > 0)
        if not merges_white:
            mu += eta
    reduced = [row[1:] for row in g[1:]]
    pos, neg, _ = _inertia(reduced)
    return (pos - neg) + mu


def signature(d: OrientedDiagram) -> int:
    if d.n_components != 1:
        raise DiagramError("signature is only computed for knots")
    if d.c == 0:
        return 0
    return goeritz_signature(d, 0)


def writhe(d: OrientedDiagram) -> int:
    return d.writhe


def is_alternating(d: OrientedDiagram) -> bool:
    """True when every arc leaves one crossing on the level it does not
    enter the next one on: slots 0 and 2 are under, 1 and 3 over."""
    seen: dict[int, list[int]] = {}
    for x in d.pd.crossings:
        for slot, label in enumerate(x):
            seen.setdefault(label, []).append(slot % 2)
    return all(len(p) == 2 and p[0] != p[1] for p in seen.values())
