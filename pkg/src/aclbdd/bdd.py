"""Reduced ordered binary decision diagrams.

A :class:`BddManager` owns a shared, append-only store of decision
nodes over a fixed variable order.  Every boolean function that can be
written over those variables has exactly one node (or terminal) in the
store, so two functions are equivalent exactly when their handles are
equal.  Handles are wrapped in :class:`Ref` values that remember their
manager; refs from different managers never mix.

The representation is the classic one: two terminals ``FALSE``/``TRUE``
plus non-terminal nodes ``(var, low, high)`` where ``low`` is taken
when ``var`` is 0.  Reduction (no duplicate nodes, no node with equal
branches) is enforced at construction time, and there are no
complement edges or attributed arcs anywhere.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

AND = "and"
OR = "or"
XOR = "xor"
IMPLIES = "implies"

_OPS = (AND, OR, XOR, IMPLIES)
_COMMUTATIVE = frozenset((AND, OR, XOR))

FALSE_HANDLE = 0
TRUE_HANDLE = 1


class BddError(Exception):
    """Base class for decision-diagram errors."""


class OrderingError(BddError):
    """Raised when a requested node would break the variable order."""


class EvalError(BddError):
    """Raised when evaluation needs a variable the assignment lacks."""


@dataclass(frozen=True, slots=True)
class Ref:
    """Handle to one boolean function inside one manager.

    Refs are cheap immutable values.  Equality and hashing follow the
    ``(manager, index)`` pair, so ``a == b`` answers "same function?"
    in constant time.  The boolean operators ``&``, ``|``, ``^`` and
    ``~`` delegate to the owning manager.
    """

    manager: "BddManager"
    index: int

    def __and__(self, other: "Ref") -> "Ref":
        return self.manager.apply(AND, self, other)

    def __or__(self, other: "Ref") -> "Ref":
        return self.manager.apply(OR, self, other)

    def __xor__(self, other: "Ref") -> "Ref":
        return self.manager.apply(XOR, self, other)

    def __invert__(self) -> "Ref":
        return self.manager.neg(self)

    @property
    def is_terminal(self) -> bool:
        return self.index < 2

    def __repr__(self) -> str:
        if self.index == FALSE_HANDLE:
            return "<Ref FALSE>"
        if self.index == TRUE_HANDLE:
            return "<Ref TRUE>"
        return f"<Ref {self.index}>"


class BddManager:
    """Canonical node store over a fixed, totally ordered variable set.

    Variables are addressed by position in the order (0 is the top of
    every diagram).  The store only ever grows; building many
    functions in one manager is what makes cross-function comparison
    free.  A manager is not thread-safe; callers serialize access.
    """

    def __init__(self, variables: int | Iterable[str]):
        if isinstance(variables, int):
            if variables <= 0:
                raise ValueError("need at least one variable")
            names = [f"x{i}" for i in range(variables)]
        else:
            names = [str(v) for v in variables]
            if not names:
                raise ValueError("need at least one variable")
            if len(set(names)) != len(names):
                raise ValueError("duplicate variable names")
        self._names = names
        n = len(names)
        # Parallel arrays indexed by handle.  Slots 0 and 1 are the
        # FALSE/TRUE terminals; they sit at the sentinel level `n` so
        # that level comparisons treat them as below every variable.
        self._var: list[int] = [n, n]
        self._low: list[int] = [0, 1]
        self._high: list[int] = [0, 1]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._apply_cache: dict[tuple[str, int, int], int] = {}
        self._ite_cache: dict[tuple[int, int, int], int] = {}
        self._neg_cache: dict[int, int] = {}
        self._restrict_cache: dict[tuple[int, int, int], int] = {}
        self.false = Ref(self, FALSE_HANDLE)
        self.true = Ref(self, TRUE_HANDLE)

    @property
    def num_vars(self) -> int:
        return len(self._names)

    @property
    def num_nodes(self) -> int:
        """Non-terminal nodes created so far, over all functions."""
        return len(self._var) - 2

    def var_name(self, index: int) -> str:
        return self._names[index]

    def var_index(self, name: str) -> int:
        try:
            return self._names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    # -- handle plumbing ------------------------------------------------

    def _handle(self, ref: Ref) -> int:
        if type(ref) is not Ref or ref.manager is not self:
            raise BddError("ref does not belong to this manager")
        return ref.index

    def _ref(self, handle: int) -> Ref:
        return Ref(self, handle)

    def node(self, ref: Ref) -> tuple[int, Ref, Ref]:
        """Decompose a non-terminal ref into ``(var, low, high)``."""
        u = self._handle(ref)
        if u < 2:
            raise ValueError("terminal has no branches")
        return self._var[u], Ref(self, self._low[u]), Ref(self, self._high[u])

    # -- construction ---------------------------------------------------

    def _mk(self, var: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (var, low, high)
        found = self._unique.get(key)
        if found is not None:
            return found
        handle = len(self._var)
        self._var.append(var)
        self._low.append(low)
        self._high.append(high)
        self._unique[key] = handle
        return handle

    def mk(self, var: int, low: Ref, high: Ref) -> Ref:
        """Return the canonical node testing ``var``.

        ``low`` applies when the variable is 0.  Both branches must
        already be rooted strictly below ``var``; anything else is a
        caller bug and raises :class:`OrderingError`.
        """
        lo = self._handle(low)
        hi = self._handle(high)
        if not 0 <= var < self.num_vars:
            raise ValueError(f"variable {var} out of range")
        if self._var[lo] <= var or self._var[hi] <= var:
            raise OrderingError(
                f"branches of variable {var} must start below it in the order"
            )
        return Ref(self, self._mk(var, lo, hi))

    def var(self, index: int) -> Ref:
        """The function that is 1 exactly when variable ``index`` is 1."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable {index} out of range")
        return Ref(self, self._mk(index, FALSE_HANDLE, TRUE_HANDLE))

    def nvar(self, index: int) -> Ref:
        """The complemented single-variable function."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable {index} out of range")
        return Ref(self, self._mk(index, TRUE_HANDLE, FALSE_HANDLE))

    # -- boolean combinators ---------------------------------------------

    def apply(self, op: str, a: Ref, b: Ref) -> Ref:
        """Combine two functions with ``and``/``or``/``xor``/``implies``."""
        if op not in _OPS:
            raise ValueError(f"unknown operator {op!r}")
        return Ref(self, self._apply(op, self._handle(a), self._handle(b)))

    def _apply(self, op: str, a: int, b: int) -> int:
        # Terminal cases first; they also catch equal operands, which
        # keeps the cache free of trivially reducible pairs.
        if op == AND:
            if a == b:
                return a
            if a == 0 or b == 0:
                return 0
            if a == 1:
                return b
            if b == 1:
                return a
        elif op == OR:
            if a == b:
                return a
            if a == 1 or b == 1:
                return 1
            if a == 0:
                return b
            if b == 0:
                return a
        elif op == XOR:
            if a == b:
                return 0
            if a == 0:
                return b
            if b == 0:
                return a
            if a == 1:
                return self._neg(b)
            if b == 1:
                return self._neg(a)
        else:  # IMPLIES
            if a == 0 or b == 1:
                return 1
            if a == 1:
                return b
            if b == 0:
                return self._neg(a)
            if a == b:
                return 1
        if op in _COMMUTATIVE and a > b:
            a, b = b, a
        key = (op, a, b)
        cached = self._apply_cache.get(key)
        if cached is not None:
            return cached
        var_arr = self._var
        va = var_arr[a]
        vb = var_arr[b]
        if va <= vb:
            v = va
            a0, a1 = self._low[a], self._high[a]
        else:
            v = vb
            a0 = a1 = a
        if vb <= va:
            b0, b1 = self._low[b], self._high[b]
        else:
            b0 = b1 = b
        result = self._mk(v, self._apply(op, a0, b0), self._apply(op, a1, b1))
        self._apply_cache[key] = result
        return result

    def neg(self, a: Ref) -> Ref:
        """Complement of a function."""
        return Ref(self, self._neg(self._handle(a)))

    def _neg(self, a: int) -> int:
        if a < 2:
            return 1 - a
        cached = self._neg_cache.get(a)
        if cached is not None:
            return cached
        result = self._mk(self._var[a], self._neg(self._low[a]), self._neg(self._high[a]))
        self._neg_cache[a] = result
        # Negation is an involution; prime the reverse entry as well.
        self._neg_cache[result] = a
        return result

    def ite(self, cond: Ref, then: Ref, other: Ref) -> Ref:
        """If-then-else: ``(cond AND then) OR (NOT cond AND other)``."""
        return Ref(
            self,
            self._ite(self._handle(cond), self._handle(then), self._handle(other)),
        )

    def _ite(self, c: int, t: int, e: int) -> int:
        if c == 1:
            return t
        if c == 0:
            return e
        if t == e:
            return t
        if t == 1 and e == 0:
            return c
        if t == 0 and e == 1:
            return self._neg(c)
        key = (c, t, e)
        cached = self._ite_cache.get(key)
        if cached is not None:
            return cached
        var_arr = self._var
        v = min(var_arr[c], var_arr[t], var_arr[e])
        if var_arr[c] == v:
            c0, c1 = self._low[c], self._high[c]
        else:
            c0 = c1 = c
        if var_arr[t] == v:
            t0, t1 = self._low[t], self._high[t]
        else:
            t0 = t1 = t
        if var_arr[e] == v:
            e0, e1 = self._low[e], self._high[e]
        else:
            e0 = e1 = e
        result = self._mk(v, self._ite(c0, t0, e0), self._ite(c1, t1, e1))
        self._ite_cache[key] = result
        return result

    # -- quantification and restriction -----------------------------------

    def exists(self, a: Ref, variables: Iterable[int]) -> Ref:
        """Existentially quantify ``variables`` out of ``a``."""
        qvars = frozenset(int(v) for v in variables)
        for v in qvars:
            if not 0 <= v < self.num_vars:
                raise ValueError(f"variable {v} out of range")
        if not qvars:
            return a
        deepest = max(qvars)
        cache: dict[int, int] = {}
        var_arr = self._var

        def walk(u: int) -> int:
            if u < 2 or var_arr[u] > deepest:
                return u
            hit = cache.get(u)
            if hit is not None:
                return hit
            v = var_arr[u]
            lo = walk(self._low[u])
            hi = walk(self._high[u])
            if v in qvars:
                res = self._apply(OR, lo, hi)
            else:
                res = self._mk(v, lo, hi)
            cache[u] = res
            return res

        return Ref(self, walk(self._handle(a)))

    def restrict(self, a: Ref, assignment: Mapping[int, int]) -> Ref:
        """Fix some variables of ``a`` to constants."""
        u = self._handle(a)
        for v, bit in sorted(assignment.items()):
            if not 0 <= v < self.num_vars:
                raise ValueError(f"variable {v} out of range")
            u = self._restrict1(u, v, 1 if bit else 0)
        return Ref(self, u)

    def _restrict1(self, u: int, var: int, bit: int) -> int:
        # Nodes rooted below `var` cannot depend on it.
        if self._var[u] > var:
            return u
        if self._var[u] == var:
            return self._high[u] if bit else self._low[u]
        key = (u, var, bit)
        cached = self._restrict_cache.get(key)
        if cached is not None:
            return cached
        result = self._mk(
            self._var[u],
            self._restrict1(self._low[u], var, bit),
            self._restrict1(self._high[u], var, bit),
        )
        self._restrict_cache[key] = result
        return result

    def cube(self, literals: Mapping[int, int]) -> Ref:
        """Conjunction of single-variable literals, e.g. ``{3: 1, 7: 0}``."""
        u = TRUE_HANDLE
        for v, bit in sorted(literals.items(), reverse=True):
            if not 0 <= v < self.num_vars:
                raise ValueError(f"variable {v} out of range")
            u = self._mk(v, 0, u) if bit else self._mk(v, u, 0)
        return Ref(self, u)

    # -- inspection -------------------------------------------------------

    def eval(self, a: Ref, assignment: Mapping[int, int]) -> bool:
        """Follow one path to a terminal under a variable assignment."""
        u = self._handle(a)
        while u >= 2:
            v = self._var[u]
            try:
                bit = assignment[v]
            except KeyError:
                raise EvalError(
                    f"assignment is missing variable {self._names[v]!r} ({v})"
                ) from None
            u = self._high[u] if bit else self._low[u]
        return u == TRUE_HANDLE

    def _reachable(self, root: int) -> set[int]:
        seen: set[int] = set()
        stack = [root]
        while stack:
            u = stack.pop()
            if u < 2 or u in seen:
                continue
            seen.add(u)
            stack.append(self._low[u])
            stack.append(self._high[u])
        return seen

    def node_count(self, a: Ref) -> int:
        """Distinct non-terminal nodes reachable from ``a``."""
        return len(self._reachable(self._handle(a)))

    def max_depth(self, a: Ref) -> int:
        """Longest root-to-terminal path, counted in decision nodes."""
        memo: dict[int, int] = {}

        def depth(u: int) -> int:
            if u < 2:
                return 0
            hit = memo.get(u)
            if hit is not None:
                return hit
            d = 1 + max(depth(self._low[u]), depth(self._high[u]))
            memo[u] = d
            return d

        return depth(self._handle(a))

    def support(self, a: Ref) -> set[int]:
        """Variables the function actually depends on."""
        return {self._var[u] for u in self._reachable(self._handle(a))}

    def sat_count(self, a: Ref, variables: Iterable[int] | None = None) -> int:
        """Count satisfying assignments over a declared variable set.

        ``variables`` defaults to every variable of the manager and
        must cover the function's support; each variable absent from a
        path doubles the count for that path.
        """
        if variables is None:
            vs = list(range(self.num_vars))
        else:
            vs = sorted(set(int(v) for v in variables))
            for v in vs:
                if not 0 <= v < self.num_vars:
                    raise ValueError(f"variable {v} out of range")
        root = self._handle(a)
        missing = self.support(Ref(self, root)) - set(vs)
        if missing:
            names = ", ".join(self._names[v] for v in sorted(missing))
            raise ValueError(f"function depends on uncounted variables: {names}")
        pos = {v: i for i, v in enumerate(vs)}
        end = len(vs)
        memo: dict[int, int] = {}

        def position(u: int) -> int:
            return end if u < 2 else pos[self._var[u]]

        def count(u: int) -> int:
            # Models over the variables from this node's position down.
            if u < 2:
                return u
            hit = memo.get(u)
            if hit is not None:
                return hit
            p = position(u)
            lo, hi = self._low[u], self._high[u]
            total = count(lo) * (1 << (position(lo) - p - 1)) + count(hi) * (
                1 << (position(hi) - p - 1)
            )
            memo[u] = total
            return total

        return count(root) * (1 << position(root))

    def to_dot(self, a: Ref, name: str = "bdd") -> str:
        """Graphviz source for the diagram rooted at ``a``.

        Solid edges are the 1-branches, dashed edges the 0-branches;
        nodes of one variable share a rank.
        """
        root = self._handle(a)
        nodes = sorted(self._reachable(root))
        lines = [f"digraph {name} {{"]
        terminals = {u for u in (FALSE_HANDLE, TRUE_HANDLE) if u == root}
        for u in nodes:
            terminals.add(self._low[u])
            terminals.add(self._high[u])
        for t in sorted(terminals & {0, 1}):
            lines.append(f'  n{t} [label="{t}", shape=box];')
        by_var: dict[int, list[int]] = {}
        for u in nodes:
            by_var.setdefault(self._var[u], []).append(u)
        for v in sorted(by_var):
            for u in by_var[v]:
                lines.append(f'  n{u} [label="{self._names[v]}", shape=circle];')
            same = "; ".join(f"n{u}" for u in by_var[v])
            lines.append(f"  {{ rank=same; {same}; }}")
        for u in nodes:
            lines.append(f"  n{u} -> n{self._low[u]} [style=dashed];")
            lines.append(f"  n{u} -> n{self._high[u]};")
        lines.append("}")
        return "\n".join(lines)

    def assert_consistent(self) -> None:
        """Check store invariants; intended for tests and debugging."""
        n = self.num_vars
        assert self._var[0] == n and self._var[1] == n
        for u in range(2, len(self._var)):
            v, lo, hi = self._var[u], self._low[u], self._high[u]
            assert 0 <= v < n, f"node {u} has bad variable {v}"
            assert lo != hi, f"node {u} is redundant"
            assert self._var[lo] > v, f"node {u} breaks the order on its 0-branch"
            assert self._var[hi] > v, f"node {u} breaks the order on its 1-branch"
            assert self._unique.get((v, lo, hi)) == u, f"node {u} is a duplicate"
