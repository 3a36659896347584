"""Exact Lagrangian fillings as replayable move sequences on fronts.

A certificate lists moves that build a front upward from the empty front:

* ``birth`` inserts a standard eye ``L p, R p`` before event ``index``;
* ``pinch`` deletes a right cusp immediately followed by a left cusp at the
  same position (``R p, L p``), joining the two pairs of strands into two
  parallel strands; this is the saddle of a 1-handle;
* ``isotopy`` applies one entry of a fixed catalogue of Legendrian
  Reidemeister moves and commutations.

The surface has ``chi = #birth - #pinch``.  Certificates are produced by
working downward from the target front: an innermost eye loses its
crossings one at a time, each by a cut (a reversed pinch) followed by a
loop removal, and finally dies.  Each crossing also carries a cut and a
death that cancel in ``chi``, so every crossing costs two pinches and one
birth in the recorded sequence.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .legendrian import Event, FrontDiagram, FrontError, L, R, X, n_components, replay, tb


class MoveError(ValueError):
    """A move does not apply to the front it is given."""


class CertificateError(ValueError):
    """A certificate fails to replay; ``step`` is the index of the bad move."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"move {step}: {reason}")
        self.step = step
        self.reason = reason


class FillingError(ValueError):
    """The generator cannot handle this front."""


@dataclass(frozen=True)
class Move:
    type: str
    index: int
    position: int = 0
    move_id: str | None = None
    orientation: int | None = None

    def to_json(self) -> dict:
        out: dict = {"type": self.type, "index": self.index, "position": self.position}
        if self.move_id is not None:
            out["move_id"] = self.move_id
        if self.orientation is not None:
            out["orientation"] = self.orientation
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Move":
        extra = set(data) - {"type", "index", "position", "move_id", "orientation"}
        if extra:
            raise ValueError(f"unknown move fields {sorted(extra)}")
        return cls(
            str(data["type"]),
            int(data["index"]),
            int(data.get("position", 0)),
            data.get("move_id"),
            data.get("orientation"),
        )


# ---------------------------------------------------------------------------
# The move catalogue


def _dirs(events: Sequence[Event], t: int) -> list[int]:
    if not 0 <= t <= len(events):
        raise MoveError(f"index {t} outside 0..{len(events)}")
    return replay(events[:t])


def _take(events: Sequence[Event], t: int, n: int) -> list[Event]:
    if t < 0 or t + n > len(events):
        raise MoveError(f"needs events {t}..{t + n - 1}, the front has {len(events)}")
    return list(events[t:t + n])


def _footprint_after(ev: Event) -> tuple[int, int]:
    # doubled coordinates: strand p -> 2p, gap between p-1 and p -> 2p-1
    if ev.kind == "R":
        return 2 * ev.pos - 1, 2 * ev.pos - 1
    return 2 * ev.pos, 2 * ev.pos + 2


def _footprint_before(ev: Event) -> tuple[int, int]:
    if ev.kind == "L":
        return 2 * ev.pos - 1, 2 * ev.pos - 1
    return 2 * ev.pos, 2 * ev.pos + 2


def _ids_step(stack: list, ev: Event, new: tuple) -> tuple:
    """Apply ``ev`` to a stack of strand ids; return the ids it acts on."""
    k = ev.pos
    if ev.kind == "L":
        stack[k:k] = list(new)
        return tuple(new)
    touched = (stack[k], stack[k + 1])
    if ev.kind == "R":
        del stack[k:k + 2]
    else:
        stack[k], stack[k + 1] = stack[k + 1], stack[k]
    return touched


def commute(events: Sequence[Event], t: int, first: int | None = None) -> list[Event]:
    """Swap events ``t`` and ``t + 1`` when they act on separate strands.

    A right cusp followed by a left cusp in the same gap can be swapped
    with the new eye on either side of the old one; ``first`` is the
    position the new first event must have, which settles that choice.
    """
    e1, e2 = _take(events, t, 2)
    lo1, hi1 = _footprint_after(e1)
    lo2, hi2 = _footprint_before(e2)
    both_gaps = lo1 == hi1 and lo2 == hi2
    if not (hi1 < lo2 or hi2 < lo1 or both_gaps):
        raise MoveError(f"{e1} and {e2} touch the same strands")
    h = len(_dirs(events, t))
    s0 = list(range(h))
    s2 = list(s0)
    want = (_ids_step(s2, e1, ("a", "a'")), _ids_step(s2, e2, ("b", "b'")))
    for q in range(h + 3):
        for q2 in range(h + 3):
            f2 = Event(e2.kind, q, e2.up)
            f1 = Event(e1.kind, q2, e1.up)
            s = list(s0)
            try:
                _check_fits(s, f2)
                got2 = _ids_step(s, f2, ("b", "b'"))
                _check_fits(s, f1)
                got1 = _ids_step(s, f1, ("a", "a'"))
            except MoveError:
                continue
            if s == s2 and (got1, got2) == want and first in (None, q):
                out = list(events)
                out[t], out[t + 1] = f2, f1
                return out
    raise MoveError(f"{e1} and {e2} do not commute")


def _check_fits(stack: list, ev: Event) -> None:
    if ev.kind == "L":
        if ev.pos > len(stack):
            raise MoveError("position out of range")
    elif ev.pos + 1 >= len(stack):
        raise MoveError("position out of range")


def _r1(events, t, k, form, insert):
    if insert:
        dirs = _dirs(events, t)
        if k >= len(dirs):
            raise MoveError(f"no strand {k} to carry a loop")
        d = dirs[k]
        loop = [L(k + 1, d), X(k), R(k + 1)] if form == "a" else [L(k, -d), X(k + 1), R(k)]
        return list(events[:t]) + loop + list(events[t:])
    a, b, c = _take(events, t, 3)
    if form == "a":
        s = b.pos
        ok = (a.kind, b.kind, c.kind) == ("L", "X", "R") and a.pos == s + 1 and c.pos == s + 1
    else:
        s = a.pos
        ok = (a.kind, b.kind, c.kind) == ("L", "X", "R") and b.pos == s + 1 and c.pos == s
    if not ok:
        raise MoveError(f"events {t}..{t + 2} are not a type {form} loop")
    return list(events[:t]) + list(events[t + 3:])


# R2 forms: single cusp <-> cusp, crossing, crossing
def _r2_expand(ev: Event, form: str) -> list[Event]:
    k, f = ev.pos, ev.up
    if form == "Lu":
        return [L(k - 1, f), X(k), X(k - 1)]
    if form == "Ld":
        return [L(k + 1, f), X(k), X(k + 1)]
    if form == "Ru":
        return [X(k - 1), X(k), R(k - 1)]
    return [X(k + 1), X(k), R(k + 1)]


def _r2(events, t, k, form, insert):
    if insert:
        (ev,) = _take(events, t, 1)
        want = "L" if form[0] == "L" else "R"
        if ev.kind != want:
            raise MoveError(f"event {t} is not a {want} cusp")
        if form[1] == "u" and ev.pos < 1:
            raise MoveError("no strand above the cusp")
        if form[1] == "d":
            h = len(_dirs(events, t))
            need = ev.pos + 1 if form[0] == "L" else ev.pos + 3
            if h < need:
                raise MoveError("no strand below the cusp")
        return list(events[:t]) + _r2_expand(ev, form) + list(events[t + 1:])
    trio = _take(events, t, 3)
    head = trio[0] if form[0] == "L" else trio[2]
    k0 = head.pos + (1 if form == "Lu" else -1 if form == "Ld" else 1 if form == "Ru" else -1)
    single = Event(head.kind, k0, head.up)
    if k0 < 0 or _r2_expand(single, form) != trio:
        raise MoveError(f"events {t}..{t + 2} are not an R2 triple of form {form}")
    return list(events[:t]) + [single] + list(events[t + 3:])


def _r3(events, t, k):
    a, b, c = _take(events, t, 3)
    if not (a.kind == b.kind == c.kind == "X" and a == c and abs(a.pos - b.pos) == 1):
        raise MoveError(f"events {t}..{t + 2} are not a triple point")
    return list(events[:t]) + [b, a, b] + list(events[t + 3:])


CATALOGUE: dict[str, Callable[[Sequence[Event], int, int], list[Event]]] = {
    "commute": lambda ev, t, k: commute(ev, t, k),
    "R1a+": lambda ev, t, k: _r1(ev, t, k, "a", True),
    "R1a-": lambda ev, t, k: _r1(ev, t, k, "a", False),
    "R1b+": lambda ev, t, k: _r1(ev, t, k, "b", True),
    "R1b-": lambda ev, t, k: _r1(ev, t, k, "b", False),
    "R3": _r3,
}
for _form in ("Lu", "Ld", "Ru", "Rd"):
    CATALOGUE[f"R2{_form}+"] = (lambda form: lambda ev, t, k: _r2(ev, t, k, form, True))(_form)
    CATALOGUE[f"R2{_form}-"] = (lambda form: lambda ev, t, k: _r2(ev, t, k, form, False))(_form)


def birth(events: Sequence[Event], t: int, p: int, up: int) -> list[Event]:
    h = len(_dirs(events, t))
    if not 0 <= p <= h:
        raise MoveError(f"birth at position {p} with {h} strands present")
    if up not in (1, -1):
        raise MoveError("birth needs an orientation of +1 or -1")
    return list(events[:t]) + [L(p, up), R(p)] + list(events[t:])


def pinch(events: Sequence[Event], t: int, p: int) -> list[Event]:
    a, b = _take(events, t, 2)
    if (a.kind, b.kind) != ("R", "L") or a.pos != p or b.pos != p:
        raise MoveError(f"events {t}, {t + 1} are not R{p}, L{p}")
    dirs = _dirs(events, t)
    if dirs[p] != b.up:
        raise MoveError("the strands to be joined run opposite ways")
    return list(events[:t]) + list(events[t + 2:])


def apply_move(events: Sequence[Event], mv: Move) -> list[Event]:
    """Apply one upward move, raising :class:`MoveError` when illegal."""
    if mv.type == "birth":
        out = birth(events, mv.index, mv.position, mv.orientation if mv.orientation is not None else 0)
    elif mv.type == "pinch":
        out = pinch(events, mv.index, mv.position)
    elif mv.type == "isotopy":
        fn = CATALOGUE.get(mv.move_id or "")
        if fn is None:
            raise MoveError(f"unknown isotopy {mv.move_id!r}")
        out = fn(events, mv.index, mv.position)
    else:
        raise MoveError(f"unknown move type {mv.type!r}")
    try:
        FrontDiagram(out)
    except FrontError as exc:
        raise MoveError(f"result is not a front: {exc}") from None
    return out


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class CobordismCertificate:
    moves: tuple[Move, ...]
    final_front: FrontDiagram
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "moves": [m.to_json() for m in self.moves],
            "final_front": self.final_front.to_json(),
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CobordismCertificate":
        return cls(
            tuple(Move.from_json(m) for m in data["moves"]),
            FrontDiagram.from_json(data["final_front"]),
            dict(data.get("metadata", {})),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "CobordismCertificate":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class FillingReport:
    euler: int
    genus: int | None
    tb_final: int
    births: int
    pinches: int
    isotopies: int
    knot: bool
    chantraine: bool
    exact: bool = True

    def to_json(self) -> dict:
        return {
            "euler": self.euler,
            "genus": self.genus,
            "tb_final": self.tb_final,
            "births": self.births,
            "pinches": self.pinches,
            "isotopies": self.isotopies,
            "flags": {"knot": self.knot, "chantraine": self.chantraine, "exact": self.exact},
        }


def verify_certificate(cert: CobordismCertificate, require_knot: bool = False) -> FillingReport:
    """Replay every move from the empty front and check the end result.

    Links get ``genus=None``; with ``require_knot`` they are rejected.
    """
    events: list[Event] = []
    births = pinches = isos = 0
    for i, mv in enumerate(cert.moves):
        try:
            events = apply_move(events, mv)
        except MoveError as exc:
            raise CertificateError(i, str(exc)) from None
        except (FrontError, ValueError, TypeError) as exc:
            raise CertificateError(i, f"malformed move: {exc}") from None
        births += mv.type == "birth"
        pinches += mv.type == "pinch"
        isos += mv.type == "isotopy"
    end = len(cert.moves)
    if tuple(events) != cert.final_front.events:
        raise CertificateError(end, "replay does not end at the recorded final front")
    f = cert.final_front
    chi = births - pinches
    t = tb(f)
    knot = n_components(f) == 1
    genus = None
    if knot:
        if (1 - chi) % 2 or chi > 1:
            raise CertificateError(end, f"chi = {chi} is impossible for a connected knot filling")
        genus = (1 - chi) // 2
    elif require_knot:
        raise CertificateError(end, "final front is not a knot; genus is undefined")
    meta = cert.metadata
    for key, val in (("chi", chi), ("genus", genus), ("tb", t)):
        if key in meta and meta[key] != val:
            raise CertificateError(end, f"metadata {key}={meta[key]} but replay gives {val}")
    exact = meta.get("exact", True) is True
    return FillingReport(chi, genus, t, births, pinches, isos, knot, knot and t == 2 * genus - 1, exact)


# ---------------------------------------------------------------------------
# Generation


class _Recorder:
    """Applies downward steps and stores the inverse upward moves."""

    def __init__(self, events: Sequence[Event]):
        self.events = list(events)
        self.up: list[Move] = []

    def commute(self, t: int) -> None:
        first = self.events[t].pos
        self.events = commute(self.events, t)
        self.up.append(Move("isotopy", t, first, "commute"))

    def cut(self, t: int, p: int) -> None:
        dirs = _dirs(self.events, t)
        if dirs[p] == dirs[p + 1]:
            raise FillingError("cut between strands running the same way")
        self.events = self.events[:t] + [R(p), L(p, dirs[p])] + self.events[t:]
        self.up.append(Move("pinch", t, p))

    def death(self, t: int) -> None:
        a, b = _take(self.events, t, 2)
        if (a.kind, b.kind) != ("L", "R") or a.pos != b.pos:
            raise FillingError(f"events {t}, {t + 1} are not an isolated eye")
        self.events = self.events[:t] + self.events[t + 2:]
        self.up.append(Move("birth", t, a.pos, orientation=a.up))

    def iso(self, move_id: str, t: int, k: int = 0) -> None:
        before = self.events
        self.events = CATALOGUE[move_id](self.events, t, k)
        if move_id in ("commute", "R3"):
            inverse = move_id
        else:
            inverse = move_id[:-1] + ("-" if move_id.endswith("+") else "+")
        pos = k
        if move_id.endswith("-"):
            if move_id.startswith("R1a"):
                pos = before[t + 1].pos
            elif move_id.startswith("R1b"):
                pos = before[t].pos
            else:
                pos = self.events[t].pos
        self.up.append(Move("isotopy", t, pos, inverse))

    def moves(self) -> list[Move]:
        return list(reversed(self.up))


def _eye_of(events: Sequence[Event]):
    """Eyes of a front: the left cusp index owning each strand, followed
    through same-direction crossings by position (the oriented smoothing)
    and through opposite-direction crossings by strand."""
    stack: list[int] = []
    dirs: list[int] = []
    parent: dict[int, int | None] = {}
    for i, ev in enumerate(events):
        k = ev.pos
        if ev.kind == "L":
            above = stack[:k]
            below = set(stack[k:])
            enclosing = [e for e in reversed(above) if e in below]
            parent[i] = enclosing[0] if enclosing else None
            stack[k:k] = [i, i]
            dirs[k:k] = [ev.up, -ev.up]
        elif ev.kind == "R":
            del stack[k:k + 2]
            del dirs[k:k + 2]
        else:
            if dirs[k] != dirs[k + 1]:
                stack[k], stack[k + 1] = stack[k + 1], stack[k]
            dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    return parent


def _eye_positions(events: Sequence[Event], t0: int) -> list[tuple[int, int]]:
    """Positions ``(upper, lower)`` of the eye born at ``t0`` before each
    later event, following the smoothing at same-direction crossings."""
    stack: list[int] = []
    dirs: list[int] = []
    out = []
    for i, ev in enumerate(events):
        if i > t0:
            where = [p for p, e in enumerate(stack) if e == t0]
            out.append(tuple(where))
        k = ev.pos
        if ev.kind == "L":
            stack[k:k] = [i, i]
            dirs[k:k] = [ev.up, -ev.up]
        elif ev.kind == "R":
            del stack[k:k + 2]
            del dirs[k:k + 2]
        else:
            if dirs[k] != dirs[k + 1]:
                stack[k], stack[k + 1] = stack[k + 1], stack[k]
            dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    return out


def _innermost(events: Sequence[Event], exclude: set[int] = frozenset()) -> int | None:
    parent = _eye_of(events)
    has_child = {p for p in parent.values() if p is not None}
    for i in sorted(parent):
        if i not in has_child and i not in exclude:
            return i
    return None


def _remove_eye(rec: _Recorder, t: int, counts: dict | None = None) -> None:
    """Remove the innermost eye whose left cusp is event ``t``."""
    while True:
        ev = rec.events[t]
        p = ev.pos
        pos = _eye_positions(rec.events, t)
        # first later event touching the eye
        nxt = None
        for j in range(t + 1, len(rec.events)):
            up, low = pos[j - t - 1]
            e = rec.events[j]
            if e.kind == "X" and e.pos in (up - 1, low):
                nxt = ("X", j)
                break
            if e.kind == "R" and e.pos == up:
                nxt = ("R", j)
                break
            if e.kind == "X" and e.pos == up:
                raise FillingError("an eye crosses itself")
        if nxt is None:
            raise FillingError("eye never closes")
        kind, j = nxt
        while j > t + 1:
            rec.commute(t)
            t += 1
        p = rec.events[t].pos
        if kind == "R":
            rec.death(t)
            if counts is not None:
                counts["births"] += 1
            return
        x = rec.events[t + 1]
        rec.cut(t + 2, p)
        rec.iso("R1a-" if x.pos == p - 1 else "R1b-", t)
        # a cut and a death that cancel, on the eye's upper strand
        rec.iso("R1a+", t + 1, p)
        rec.cut(t + 3, p + 1)
        rec.death(t + 4)
        rec.iso("R1a-", t + 1)
        if counts is not None:
            counts["births"] += 1
            counts["pinches"] += 2


def strand_removal_moves(f: FrontDiagram, eye: int) -> tuple[list[Move], FrontDiagram, dict]:
    """Upward moves rebuilding ``f`` from ``f`` minus the innermost eye
    whose left cusp is event ``eye``, plus the smaller front and counts."""
    parent = _eye_of(f.events)
    if eye not in parent:
        raise FillingError(f"event {eye} is not a left cusp")
    if eye in {p for p in parent.values() if p is not None}:
        raise FillingError(f"eye {eye} is not innermost")
    signs = f.crossing_signs()
    pos = _eye_positions(f.events, eye)
    for j, sg in signs.items():
        if j > eye and j - eye - 1 < len(pos) and pos[j - eye - 1]:
            up, low = pos[j - eye - 1]
            if f.events[j].pos in (up - 1, low) and sg < 0:
                raise FillingError(f"crossing at event {j} ({f.events[j]}) next to the eye is negative")
    rec = _Recorder(f.events)
    counts = {"births": 0, "pinches": 0}
    _remove_eye(rec, eye, counts)
    return rec.moves(), FrontDiagram(rec.events), counts


def _positive_down(rec: _Recorder, exclude: set[int] = frozenset()) -> None:
    while rec.events:
        i = _innermost(rec.events, exclude)
        if i is None:
            return
        _remove_eye(rec, i)


def _clasp(events: Sequence[Event]) -> tuple[int, int, int, str] | None:
    """Index of the opposite-direction crossing and the eyes it clasps."""
    stack: list[int] = []
    dirs: list[int] = []
    found = None
    for i, ev in enumerate(events):
        k = ev.pos
        if ev.kind == "X" and dirs[k] != dirs[k + 1]:
            if found is not None:
                raise FillingError("more than one negative crossing")
            if stack[k] != stack[k + 1] or k + 2 >= len(stack):
                raise FillingError("the negative crossing is not a clasp")
            if k >= 1 and stack[k - 1] == stack[k + 2]:
                found = (i, stack[k - 1], stack[k], "nested")
            elif k + 3 < len(stack) and stack[k + 2] == stack[k + 3]:
                found = (i, stack[k], stack[k + 2], "side")
            else:
                raise FillingError("the negative crossing is not a clasp")
        if ev.kind == "L":
            stack[k:k] = [i, i]
            dirs[k:k] = [ev.up, -ev.up]
        elif ev.kind == "R":
            del stack[k:k + 2]
            del dirs[k:k + 2]
        elif ev.kind == "X":
            if dirs[k] != dirs[k + 1]:
                stack[k], stack[k + 1] = stack[k + 1], stack[k]
            dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    return found


def _stacks(events: Sequence[Event]) -> list[list[int]]:
    """Eye ids by position before each event."""
    stack: list[int] = []
    dirs: list[int] = []
    out = []
    for i, ev in enumerate(events):
        out.append(list(stack))
        k = ev.pos
        if ev.kind == "L":
            stack[k:k] = [i, i]
            dirs[k:k] = [ev.up, -ev.up]
        elif ev.kind == "R":
            del stack[k:k + 2]
            del dirs[k:k + 2]
        else:
            if dirs[k] != dirs[k + 1]:
                stack[k], stack[k + 1] = stack[k + 1], stack[k]
            dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    out.append(list(stack))
    return out


def _is_partner(events: Sequence[Event], j: int, eyes: set[int]) -> bool:
    ev = events[j]
    if ev.kind != "X":
        return False
    st = _stacks(events[:j])[-1]
    return {st[ev.pos], st[ev.pos + 1]} == eyes


def _bring_partner(events: Sequence[Event], tc: int, eyes: set[int], limit: int = 20_000):
    """Shortest run of commutations and triple-point moves before the clasp
    at ``tc`` after which the crossing just before it joins ``eyes``."""
    start = tuple(events[:tc])
    rest = list(events[tc:])
    if _is_partner(events, tc - 1, eyes):
        return []
    seen = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for j in range(tc - 1):
            for name in ("commute", "R3"):
                if name == "R3" and j + 2 >= tc:
                    continue
                try:
                    nxt = commute(cur, j) if name == "commute" else _r3(cur, j, 0)
                except MoveError:
                    continue
                key = tuple(nxt)
                if key in seen:
                    continue
                seen[key] = (cur, name, j)
                full = list(key) + rest
                if _is_partner(full, tc - 1, eyes):
                    path = []
                    while seen[key] is not None:
                        prev, nm, jj = seen[key]
                        path.append((nm, jj))
                        key = prev
                    return path[::-1]
                if len(seen) > limit:
                    raise FillingError("no partner crossing reaches the clasp within the search budget")
                queue.append(key)
    raise FillingError("no partner crossing can be brought next to the clasp")


def _p2_down(rec: _Recorder) -> None:
    """Remove everything but the clasped eyes, then cancel the clasp against
    a partner crossing with an R2 move."""
    while True:
        tc, a, b, kind = _clasp(rec.events)
        i = _innermost(rec.events, {a, b})
        if i is None:
            break
        _remove_eye(rec, i)
    tc, a, b, kind = _clasp(rec.events)
    for name, j in _bring_partner(rec.events, tc, {a, b}):
        if name == "commute":
            rec.commute(j)
        else:
            rec.iso("R3", j)
    xc = rec.events[tc]
    xp = rec.events[tc - 1]
    if kind == "side":
        # X k+1, X k, R k+1 -> R k
        rec.iso("R2Rd-", tc - 1)
    elif xp.pos == xc.pos - 1:
        # nested, partner above: X k, X k+1, R k -> R k+1
        rec.iso("R2Ru-", tc - 1)
    else:
        # nested, partner below: bring the lower right cusp first
        rec.commute(tc + 1)
        rec.iso("R2Rd-", tc - 1)
    _positive_down(rec)


def generate_filling(f: FrontDiagram, mode: str = "auto") -> CobordismCertificate:
    """Certificate building ``f`` from the empty front.

    ``mode`` is ``positive``, ``p2`` or ``auto`` (chosen from the crossing
    signs of the front).
    """
    negs = [i for i, s in f.crossing_signs().items() if s < 0]
    if mode == "auto":
        mode = "positive" if not negs else "p2"
    rec = _Recorder(f.events)
    if mode == "positive":
        if negs:
            raise FillingError("positive mode needs a front without negative crossings")
        _positive_down(rec)
    elif mode == "p2":
        if n_components(f) != 1:
            raise FillingError("P2 fillings are generated for knot fronts only")
        if len(negs) != 1:
            raise FillingError("P2 mode needs exactly one negative crossing")
        _p2_down(rec)
    else:
        raise FillingError(f"unknown mode {mode!r}")
    if rec.events:
        raise FillingError("generator stopped before reaching the empty front")
    moves = rec.moves()
    births = sum(m.type == "birth" for m in moves)
    pinches = sum(m.type == "pinch" for m in moves)
    chi = births - pinches
    genus = (1 - chi) // 2 if n_components(f) == 1 else None
    meta = {"chi": chi, "genus": genus, "tb": tb(f), "exact": True}
    return CobordismCertificate(tuple(moves), f, meta)
