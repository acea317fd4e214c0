"""A small exact max-flow (Dinic) on integer capacities.

Kept dependency-free and allocation-light: the per-call cost matters because
the verification suites solve hundreds of thousands of tiny cut instances.
Arcs are stored in flat parallel lists with reverse arcs at index ^ 1.
"""

from __future__ import annotations

from collections import deque


class Dinic:
    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, cap_rev: int = 0) -> None:
        """Arc u->v with capacity cap; cap_rev > 0 makes it undirected."""
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(cap_rev)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if level[v] < 0 and self.cap[a] > 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS; path holds the arc taken out of each visited node
        total = 0
        path: list[int] = []
        u = s
        while True:
            if u == t:
                pushed = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                total += pushed
                # back up to the first saturated arc on the path
                for i, a in enumerate(path):
                    if self.cap[a] == 0:
                        del path[i:]
                        break
                u = self.to[path[-1]] if path else s
                continue
            advanced = False
            arcs = self.adj[u]
            while it[u] < len(arcs):
                a = arcs[it[u]]
                v = self.to[a]
                if self.cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == s:
                    return total
                level[u] = -1  # dead end; prune
                u = self.to[path.pop() ^ 1]
                it[u] += 1

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            flow += self._blocking_flow(s, t, level, [0] * self.n)

    def residual_reachable(self, s: int) -> set[int]:
        """Nodes reachable from s over positive residual capacity; after
        max_flow this is the canonical minimal source side of a min cut."""
        reach = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if v not in reach and self.cap[a] > 0:
                    reach.add(v)
                    queue.append(v)
        return reach
