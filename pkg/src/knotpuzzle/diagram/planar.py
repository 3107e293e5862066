"""Mutable planar diagrams for Reidemeister moves.

A crossing owns four slots numbered counterclockwise; slots 0 and 2 carry the
under-strand and slots 1 and 3 the over-strand.  Orientation is not stored:
it is recovered by traversal when converting back to a PD code.

A *dart* ``(c, s)`` means "leave crossing ``c`` through slot ``s``".  Following
the edge lands on ``(c2, s2)``; the next dart of the same face is
``(c2, s2 - 1)``, so every face lies on the left of its darts.

Moves are encoded as plain tuples so that a sequence of them can be stored,
serialised and replayed:

* ``("R1", c, s)``  remove the kink whose loop edge joins slots ``s`` and ``s+1``;
* ``("R2", c, s)``  remove the bigon face starting at dart ``(c, s)``;
* ``("R3", c, s)``  slide across the triangle face starting at dart ``(c, s)``;
* ``("R2+", c1, s1, c2, s2, over)``  push the edge of dart ``(c1, s1)`` across
  the edge of dart ``(c2, s2)`` (same face), over if ``over`` else under;
* ``("R1+", c, s, side, over)``  add a kink on the edge of dart ``(c, s)``, or on
  a free loop when ``c == -1``.  ``over`` says whether the strand enters the
  new crossing on the over-strand, ``side`` which side the loop bulges to.
"""

from __future__ import annotations

from typing import Iterator

from knotpuzzle.diagram.pd import PDCode
from knotpuzzle.errors import ValidationError

__all__ = ["Diagram", "Move"]

Slot = tuple[int, int]
Move = tuple


class Diagram:
    __slots__ = ("nbr", "free_loops", "next_id")

    def __init__(self, nbr: dict[int, list[Slot]] | None = None, free_loops: int = 0, next_id: int = 0):
        self.nbr: dict[int, list[Slot]] = nbr if nbr is not None else {}
        self.free_loops = free_loops
        self.next_id = next_id

    @classmethod
    def from_pd(cls, pd: PDCode) -> "Diagram":
        where: dict[int, list[Slot]] = {}
        for i, x in enumerate(pd.crossings):
            for s, v in enumerate(x):
                where.setdefault(v, []).append((i, s))
        nbr = {i: [(-1, -1)] * 4 for i in range(len(pd.crossings))}
        for v, places in where.items():
            if len(places) != 2:
                raise ValidationError(f"label {v} appears {len(places)} times, expected exactly 2")
            (i, s), (j, t) = places
            nbr[i][s] = (j, t)
            nbr[j][t] = (i, s)
        return cls(nbr, pd.free_loops, len(pd.crossings))

    def copy(self) -> "Diagram":
        return Diagram({c: list(v) for c, v in self.nbr.items()}, self.free_loops, self.next_id)

    def __len__(self) -> int:
        return len(self.nbr)

    def _link(self, p: Slot, q: Slot) -> None:
        self.nbr[p[0]][p[1]] = q
        self.nbr[q[0]][q[1]] = p

    # ------------------------------------------------------------------ export

    def to_pd(self) -> PDCode:
        """PD code with labels 1..2n, components oriented by traversal."""
        labels: dict[Slot, int] = {}
        incoming: set[Slot] = set()
        label = 0
        # under passes first: slot 0 is the incoming under-strand whenever the
        # diagram came from a PD code or a braid, which keeps link orientations
        for s, c in [(0, c) for c in sorted(self.nbr)] + [(1, c) for c in sorted(self.nbr)]:
            if (c, s) in labels:
                continue
            # walk the strand entering at slot s
            cur = (c, (s + 2) % 4)
            while True:
                label += 1
                labels[cur] = label
                head = self.nbr[cur[0]][cur[1]]
                labels[head] = label
                incoming.add(head)
                cur = (head[0], (head[1] + 2) % 4)
                if cur == (c, (s + 2) % 4):
                    break
        out = []
        for c in sorted(self.nbr):
            ls = [labels[(c, s)] for s in range(4)]
            if (c, 0) in incoming:
                out.append(tuple(ls))
            else:
                out.append((ls[2], ls[3], ls[0], ls[1]))
        return PDCode(tuple(out), self.free_loops)

    def component_count(self) -> int:
        seen: set[Slot] = set()
        count = 0
        for c in self.nbr:
            for s in range(4):
                if (c, s) in seen:
                    continue
                count += 1
                cur = (c, s)
                while cur not in seen:
                    seen.add(cur)
                    other = (cur[0], (cur[1] + 2) % 4)
                    seen.add(other)
                    cur = self.nbr[other[0]][other[1]]
        return count + self.free_loops

    # ------------------------------------------------------------------ faces

    def next_dart(self, dart: Slot) -> Slot:
        c2, s2 = self.nbr[dart[0]][dart[1]]
        return (c2, (s2 - 1) % 4)

    def faces(self) -> list[list[Slot]]:
        seen: set[Slot] = set()
        out = []
        for c in sorted(self.nbr):
            for s in range(4):
                if (c, s) in seen:
                    continue
                face = []
                d = (c, s)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    d = self.next_dart(d)
                out.append(face)
        return out

    def euler_ok(self) -> bool:
        """Genus-zero check: faces = crossings + 2 on every connected piece."""
        parent = {c: c for c in self.nbr}

        def find(c: int) -> int:
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        for c, slots in self.nbr.items():
            for c2, _ in slots:
                a, b = find(c), find(c2)
                if a != b:
                    parent[a] = b
        count: dict[int, int] = {}
        for c in self.nbr:
            count[find(c)] = count.get(find(c), 0) + 1
        fcount: dict[int, int] = {}
        for face in self.faces():
            r = find(face[0][0])
            fcount[r] = fcount.get(r, 0) + 1
        return all(fcount.get(r, 0) == n + 2 for r, n in count.items())

    # ------------------------------------------------------------------ candidates

    def r1_sites(self) -> Iterator[Move]:
        for c in sorted(self.nbr):
            for s in range(4):
                if self.nbr[c][s] == (c, (s + 1) % 4):
                    yield ("R1", c, s)

    def r2_sites(self) -> Iterator[Move]:
        for face in self.faces():
            if len(face) != 2:
                continue
            (c, a), (d, _) = face
            if c == d:
                continue
            b = self.nbr[c][a][1]
            if a % 2 == b % 2:
                yield ("R2", *min(face))

    def r3_sites(self) -> Iterator[Move]:
        for face in self.faces():
            if len(face) != 3:
                continue
            if len({c for c, _ in face}) != 3:
                continue
            if self._r3_lines(face[0]) is not None:
                start = min(face)
                yield ("R3", *start)

    def r2_insert_sites(self) -> Iterator[Move]:
        for face in self.faces():
            k = len(face)
            for i in range(k):
                for j in range(i + 1, k):
                    d1, d2 = face[i], face[j]
                    if self.nbr[d2[0]][d2[1]] == d1:
                        continue  # same edge seen from both sides
                    for over in (1, 0):
                        yield ("R2+", d1[0], d1[1], d2[0], d2[1], over)

    def r1_insert_sites(self) -> Iterator[Move]:
        darts = [(c, s) for c in sorted(self.nbr) for s in range(4)]
        if self.free_loops:
            darts.insert(0, (-1, 0))
        for c, s in darts:
            for side in (0, 1):
                for over in (0, 1):
                    yield ("R1+", c, s, side, over)

    # ------------------------------------------------------------------ moves

    def apply(self, move: Move) -> None:
        try:
            self._apply(move)
        except (KeyError, IndexError):
            raise ValueError(f"move {move!r} refers to a missing crossing or slot") from None

    def _apply(self, move: Move) -> None:
        kind = move[0]
        if kind == "R1":
            self._r1(move[1], move[2])
        elif kind == "R2":
            self._r2(move[1], move[2])
        elif kind == "R3":
            self._r3(move[1], move[2])
        elif kind == "R1+":
            self._r1_insert((move[1], move[2]), move[3], bool(move[4]))
        elif kind == "R2+":
            self._r2_insert((move[1], move[2]), (move[3], move[4]), bool(move[5]))
        else:
            raise ValueError(f"unknown move {move!r}")

    def _splice_out(self, removed: set[int], through: dict[Slot, Slot]) -> None:
        """Delete crossings, reconnecting the strands that ran through them."""
        visited: set[Slot] = set()
        outside: list[Slot] = []
        for c in removed:
            for s in range(4):
                q = self.nbr[c][s]
                if q[0] not in removed:
                    outside.append(q)
        links = []
        for p in outside:
            cur = self.nbr[p[0]][p[1]]
            while True:
                visited.add(cur)
                o = through[cur]
                visited.add(o)
                nxt = self.nbr[o[0]][o[1]]
                if nxt[0] not in removed:
                    links.append((p, nxt))
                    break
                cur = nxt
        for c in sorted(removed):
            for s in range(4):
                start = (c, s)
                if start in visited:
                    continue
                self.free_loops += 1
                cur = start
                while cur not in visited:
                    visited.add(cur)
                    o = through[cur]
                    visited.add(o)
                    cur = self.nbr[o[0]][o[1]]
        for c in removed:
            del self.nbr[c]
        for p, q in links:
            self._link(p, q)

    def _r1(self, c: int, s: int) -> None:
        if self.nbr[c][s] != (c, (s + 1) % 4):
            raise ValueError(f"no kink at crossing {c} slot {s}")
        through = {(c, k): (c, (k + 2) % 4) for k in range(4)}
        self._splice_out({c}, through)

    def _r2(self, c: int, a: int) -> None:
        d, b = self.nbr[c][a]
        if d == c or self.nbr[d][(b - 1) % 4] != (c, (a + 1) % 4) or a % 2 != b % 2:
            raise ValueError(f"no reducible bigon at dart ({c}, {a})")
        through = {(x, k): (x, (k + 2) % 4) for x in (c, d) for k in range(4)}
        self._splice_out({c, d}, through)

    def _r3_lines(self, dart: Slot) -> list[tuple[Slot, Slot]] | None:
        """The three lines of the triangle face at ``dart`` as (internal, internal) slot pairs."""
        c1, s1 = dart
        c2, t2 = self.nbr[c1][s1]
        c3, t3 = self.nbr[c2][(t2 - 1) % 4]
        back = self.nbr[c3][(t3 - 1) % 4]
        if back != (c1, (s1 + 1) % 4) or len({c1, c2, c3}) != 3:
            return None
        lines = [
            ((c1, s1), (c2, t2)),
            ((c2, (t2 - 1) % 4), (c3, t3)),
            ((c3, (t3 - 1) % 4), (c1, (s1 + 1) % 4)),
        ]
        if any(p[1] % 2 == q[1] % 2 for p, q in lines):
            return lines
        return None

    def _r3(self, c: int, s: int) -> None:
        lines = self._r3_lines((c, s))
        if lines is None:
            raise ValueError(f"no R3 triangle at dart ({c}, {s})")
        remap: dict[Slot, Slot] = {}
        new_edges: list[tuple[Slot, Slot]] = []
        for (ca, ia), (cb, ib) in lines:
            ea = (ca, (ia + 2) % 4)
            eb = (cb, (ib + 2) % 4)
            remap[ea] = (cb, ib)
            remap[eb] = (ca, ia)
            new_edges.append((ea, eb))
        old = {u: self.nbr[u[0]][u[1]] for u in remap}
        for u, v in old.items():
            self._link(remap[u], remap.get(v, v))
        for u, v in new_edges:
            self._link(u, v)

    def _r1_insert(self, dart: Slot, side: int, over: bool) -> None:
        if dart[0] == -1:
            if self.free_loops < 1:
                raise ValueError("no free loop to kink")
            a = b = None
        else:
            a, b = dart, self.nbr[dart[0]][dart[1]]
        if side not in (0, 1):
            raise ValueError(f"kink side must be 0 or 1, got {side!r}")
        x = self.next_id
        self.next_id += 1
        self.nbr[x] = [(-1, -1)] * 4
        e = 1 if over else 0
        f = (e + 1) % 4 if side == 0 else (e + 3) % 4
        self._link((x, (e + 2) % 4), (x, (f + 2) % 4))
        if a is None:
            self.free_loops -= 1
            self._link((x, e), (x, f))
        else:
            self._link((x, e), a)
            self._link((x, f), b)

    def _r2_insert(self, d1: Slot, d2: Slot, over: bool) -> None:
        a, b = d1, self.nbr[d1[0]][d1[1]]
        c, d = d2, self.nbr[d2[0]][d2[1]]
        if d == a or len({a, b, c, d}) != 4:
            raise ValueError("R2 insertion needs two distinct edges")
        dart = self.next_dart(d1)
        while dart != d1 and dart != d2:
            dart = self.next_dart(dart)
        if dart != d2:
            raise ValueError("R2 insertion needs two edges on the same face")
        x1, x2 = self.next_id, self.next_id + 1
        self.next_id += 2
        self.nbr[x1] = [(-1, -1)] * 4
        self.nbr[x2] = [(-1, -1)] * 4
        # compass slots: the pushed edge runs south->north at x1, north->south at x2
        if over:
            E, N, W, S = 0, 1, 2, 3
        else:
            N, W, S, E = 0, 1, 2, 3
        self._link((x1, S), a)
        self._link((x1, N), (x2, N))
        self._link((x2, S), b)
        self._link((x2, E), c)
        self._link((x2, W), (x1, E))
        self._link((x1, W), d)

    # ------------------------------------------------------------------ identity

    def canonical_key(self) -> tuple:
        """Relabeling-invariant key; equal keys mean combinatorially equal diagrams."""
        if not self.nbr:
            return ((), self.free_loops)
        pieces = []
        todo = set(self.nbr)
        while todo:
            root = min(todo)
            piece = self._piece(root)
            todo -= piece
            best = None
            for c in piece:
                for r in (0, 2):
                    code = self._code_from(c, r)
                    if best is None or code < best:
                        best = code
            pieces.append(best)
        pieces.sort()
        return (tuple(pieces), self.free_loops)

    def _piece(self, root: int) -> set[int]:
        seen = {root}
        stack = [root]
        while stack:
            c = stack.pop()
            for c2, _ in self.nbr[c]:
                if c2 not in seen:
                    seen.add(c2)
                    stack.append(c2)
        return seen

    def _code_from(self, start: int, rot: int) -> tuple:
        ids = {start: 0}
        rots = {start: rot}
        order = [start]
        code = []
        i = 0
        while i < len(order):
            c = order[i]
            r = rots[c]
            for k in range(4):
                c2, s2 = self.nbr[c][(k + r) % 4]
                if c2 not in ids:
                    ids[c2] = len(order)
                    rots[c2] = s2 & 2
                    order.append(c2)
                code.append(ids[c2] * 4 + (s2 - rots[c2]) % 4)
            i += 1
        return tuple(code)
