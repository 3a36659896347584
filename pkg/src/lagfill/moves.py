"""Reidemeister moves on oriented diagrams.

Every move acts on internal crossings ``(a, b, c, d, sign)`` and the result is
relabelled into a valid PD code and re-validated (planarity included).
Insertions are only accepted when the matching removal gives back the
original diagram, so each accepted move is a genuine isotopy.
"""

from __future__ import annotations

import random
from itertools import count
from typing import Sequence

from .diagram import Crossing, DiagramError, OrientedDiagram, from_oriented, trace_faces
from .homflypt import canonical_key, find_r1, find_r2, remove_r1, remove_r2

_fresh = count(10**6)


def _heads(xs: Sequence[Crossing]) -> dict[int, tuple[int, int]]:
    head = {}
    for i, x in enumerate(xs):
        head[x[0]] = (i, 0)
        head[x[1] if x[4] > 0 else x[3]] = (i, 1 if x[4] > 0 else 3)
    return head


def _tails(xs: Sequence[Crossing]) -> dict[int, tuple[int, int]]:
    tail = {}
    for i, x in enumerate(xs):
        tail[x[2]] = (i, 2)
        tail[x[3] if x[4] > 0 else x[1]] = (i, 3 if x[4] > 0 else 1)
    return tail


def _set(xs: list[list], slot: tuple[int, int], lab) -> None:
    xs[slot[0]][slot[1]] = lab


def _finish(xs: Sequence[Sequence]) -> OrientedDiagram:
    return from_oriented(tuple(x) for x in xs)


def _same(xs: Sequence[Crossing], loops: int, d: OrientedDiagram) -> bool:
    if not xs:
        return d.c == 0
    return loops == 0 and canonical_key(list(xs)) == canonical_key(list(d.crossings))


def r1_insert(d: OrientedDiagram, label: int | None, variant: int) -> OrientedDiagram:
    """Add a kink on arc ``label``; ``variant`` in 0..3 picks sign and side."""
    x, y, z = next(_fresh), next(_fresh), next(_fresh)
    xs = [list(c) for c in d.crossings]
    if not xs:
        x = z
    else:
        head, tail = _heads(d.crossings), _tails(d.crossings)
        _set(xs, tail[label], x)
        _set(xs, head[label], z)
    kink = [(x, y, y, z, 1), (x, z, y, y, -1), (y, x, z, y, 1), (y, y, z, x, -1)][variant]
    xs.append(list(kink))
    return _finish(xs)


def r1_remove(d: OrientedDiagram) -> OrientedDiagram | None:
    hit = find_r1(d.crossings)
    if hit is None:
        return None
    xs, _ = remove_r1(d.crossings, *hit)
    return _finish(xs)


def r2_remove(d: OrientedDiagram) -> OrientedDiagram | None:
    hit = find_r2(d.crossings)
    if hit is None:
        return None
    xs, loops = remove_r2(d.crossings, *hit)
    if loops and xs:
        return None
    return _finish(xs)


def _r2_candidates(top: int, bottom: int, head, tail, xs0):
    """All tuple choices pushing arc ``top`` over arc ``bottom``."""
    a, m, b = next(_fresh), next(_fresh), next(_fresh)
    c, n, e = next(_fresh), next(_fresh), next(_fresh)
    for order in (0, 1):
        for sp in (1, -1):
            xs = [list(x) for x in xs0]
            _set(xs, tail[top], a)
            _set(xs, head[top], b)
            _set(xs, tail[bottom], c)
            _set(xs, head[bottom], e)
            # under passages at P and Q
            under = [(c, n), (n, e)] if order == 0 else [(n, e), (c, n)]
            over = [(a, m), (m, b)]
            for (u_in, u_out), (o_in, o_out), s in zip(under, over, (sp, -sp)):
                if s > 0:
                    xs.append([u_in, o_in, u_out, o_out, 1])
                else:
                    xs.append([u_in, o_out, u_out, o_in, -1])
            yield xs, m, n


def r2_insert(d: OrientedDiagram, top: int, bottom: int) -> OrientedDiagram | None:
    """Slide arc ``top`` over arc ``bottom`` across a face they share."""
    if top == bottom or not d.crossings:
        return None
    head, tail = _heads(d.crossings), _tails(d.crossings)
    for xs, m, n in _r2_candidates(top, bottom, head, tail, d.crossings):
        try:
            new = _finish(xs)
        except DiagramError:
            continue
        hit = find_r2(new.crossings)
        if hit is None:
            continue
        # the bigon found first need not be ours; check every bigon
        for face in trace_faces(new.crossings):
            if len(face) != 2:
                continue
            (i, k), (j, mm) = face
            if i == j:
                continue
            p, q = k, (mm + 1) % 4
            if p % 2 != q % 2:
                continue
            back, loops = remove_r2(new.crossings, i, p, j, q)
            if _same(back, loops, d):
                return new
    return None


def triangles(xs: Sequence[Crossing]) -> list[tuple[tuple[int, int], ...]]:
    """Triangle faces on which an R3 move applies."""
    out = []
    for face in trace_faces(xs):
        if len(face) != 3 or len({i for i, _ in face}) != 3:
            continue
        for t in range(3):
            k, m = face[t][1], face[(t + 1) % 3][1]
            if k % 2 == 1 and (m + 1) % 2 == 1:
                out.append(face)
                break
    return out


def r3(d: OrientedDiagram, face: Sequence[tuple[int, int]]) -> OrientedDiagram:
    """Move the strand opposite a triangle's corner across that crossing.

    Each strand meets the other two in reverse order afterwards; at its first
    triangle crossing its ``(in, mid)`` labels become ``(mid, out)`` and at
    its second ``(mid, out)`` becomes ``(in, mid)``.
    """
    xs0 = d.crossings
    head, tail = _heads(xs0), _tails(xs0)
    xs = [list(x) for x in xs0]
    for i, k in face:
        mid = xs0[i][k]
        ti, tp = tail[mid]
        hi, hp = head[mid]
        lab_in = xs0[ti][(tp + 2) % 4]
        lab_out = xs0[hi][(hp + 2) % 4]
        xs[ti][(tp + 2) % 4] = mid
        xs[ti][tp] = lab_out
        xs[hi][hp] = lab_in
        xs[hi][(hp + 2) % 4] = mid
    return _finish(xs)


def random_move(d: OrientedDiagram, rng: random.Random, max_crossings: int = 14) -> tuple[str, OrientedDiagram]:
    """Apply one randomly chosen admissible Reidemeister move."""
    kinds = ["R1+", "R2+", "R3", "R1-", "R2-"]
    if d.c >= max_crossings:
        kinds = ["R3", "R1-", "R2-"]
    for _ in range(50):
        kind = rng.choice(kinds)
        labels = sorted({lab for x in d.crossings for lab in x[:4]})
        if kind == "R1+":
            label = rng.choice(labels) if labels else None
            return kind, r1_insert(d, label, rng.randrange(4))
        if kind == "R2+" and len(labels) >= 2:
            faces = trace_faces(d.crossings)
            face = rng.choice(faces)
            edges = [d.crossings[i][k] for i, k in face]
            if len(set(edges)) < 2:
                continue
            top, bottom = rng.sample(sorted(set(edges)), 2)
            new = r2_insert(d, top, bottom)
            if new is not None:
                return kind, new
        if kind == "R3":
            tris = triangles(d.crossings)
            if tris:
                return kind, r3(d, rng.choice(tris))
        if kind == "R1-":
            new = r1_remove(d)
            if new is not None:
                return kind, new
        if kind == "R2-":
            new = r2_remove(d)
            if new is not None:
                return kind, new
    return "none", d
