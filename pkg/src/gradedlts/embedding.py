"""Standard embedding of a graded Leibniz triple system.

The embedding is the two-graded right Leibniz algebra L = L0 + L1 with odd
part L1 the system itself and even part L0 built from tensors x (x) y.  The
raw tensor square is too large to carry a well-defined algebra structure,
so L0 is realized concretely as the quotient of the tensor square by

    N = ker(phi) & ker(psi),

where phi(x(x)y) is left multiplication w -> {x, y, w} and psi(x(x)y) is
the twisted right action z -> {z, x, y} - {z, y, x}.  N is the largest
subspace acting trivially in both actions, so the bracket

    [(x(x)y, z), (u(x)v, w)] = ({x,y,u}(x)v - {x,y,v}(x)u + z(x)w,
                                {x,y,w} + {z,u,v} - {z,v,u})

has a chance to descend.  Descent is not assumed: `build_embedding`
certifies that bracketing the tensor square into N stays inside N and that
the quotient algebra satisfies the right Leibniz identity on every basis
triple, raising `NotWellDefined` or `LeibnizIdentityFailure` with a witness
otherwise.

Quotient coordinates are the greedy standard-tensor complement of N, which
is deterministic, and the resulting coordinate tensors are homogeneous, so
the even part inherits the grading.  Everything is immutable after build.
"""

from __future__ import annotations

from itertools import product

from .errors import DecompositionFailure, LeibnizIdentityFailure, NotWellDefined
from .groups import GroupElement
from .linalg import Matrix, Subspace, complete_complement, invert, kernel, vec_times_matrix
from .triples import GradedTripleSystem


class StandardEmbedding:
    """The computed standard embedding; construct via `build_embedding`."""

    __slots__ = (
        "system",
        "tensor_dim",
        "null_space",
        "coset_indices",
        "dim_even",
        "_reduction",
        "_components",
        "_support",
        "_tensor_degrees",
    )

    def __init__(self, system, tensor_dim, null_space, coset_indices, reduction):
        self.system = system
        self.tensor_dim = tensor_dim
        self.null_space = null_space
        self.coset_indices = coset_indices
        self.dim_even = len(coset_indices)
        self._reduction = reduction
        n = system.dim
        self._tensor_degrees = tuple(
            system.degrees[c // n].compose(system.degrees[c % n]) for c in range(tensor_dim)
        )
        self._components = None
        self._support = None

    # -- quotient coordinates -------------------------------------------------

    def reduce_tensor(self, tensor_vec) -> tuple:
        """Project a tensor-square vector to quotient coordinates along N."""
        return vec_times_matrix(tensor_vec, self._reduction)

    def lift(self, coords) -> tuple:
        """Canonical tensor representative of a quotient coordinate vector."""
        zero = self.system.field.zero
        out = [zero] * self.tensor_dim
        for coef, c in zip(coords, self.coset_indices):
            out[c] = coef
        return tuple(out)

    def tensor_of_pair(self, x, y) -> tuple:
        """The tensor x (x) y of two system vectors, as a flat vector."""
        n = self.system.dim
        zero = self.system.field.zero
        out = [zero] * self.tensor_dim
        for i, xi in enumerate(x):
            if xi != zero:
                for j, yj in enumerate(y):
                    if yj != zero:
                        out[i * n + j] = xi * yj
        return tuple(out)

    # -- the two actions -------------------------------------------------------

    def phi_apply(self, tensor_vec, w) -> tuple:
        """Left multiplication by a tensor: sum {x_i, y_i, w}."""
        n = self.system.dim
        zero = self.system.field.zero
        out = [zero] * n
        for c, coef in enumerate(tensor_vec):
            if coef != zero:
                i, j = divmod(c, n)
                for widx, wc in enumerate(w):
                    if wc != zero:
                        entry = self.system.basis_product(i, j, widx)
                        for l, cc in entry.items():
                            out[l] = out[l] + coef * wc * cc
        return tuple(out)

    def psi_apply(self, tensor_vec, z) -> tuple:
        """Twisted right action of a tensor: sum {z, x_i, y_i} - {z, y_i, x_i}."""
        n = self.system.dim
        zero = self.system.field.zero
        out = [zero] * n
        for c, coef in enumerate(tensor_vec):
            if coef != zero:
                i, j = divmod(c, n)
                for zidx, zc in enumerate(z):
                    if zc != zero:
                        for l, cc in self.system.basis_product(zidx, i, j).items():
                            out[l] = out[l] + coef * zc * cc
                        for l, cc in self.system.basis_product(zidx, j, i).items():
                            out[l] = out[l] - coef * zc * cc
        return tuple(out)

    def tensor_bracket(self, tensor_a, tensor_b) -> tuple:
        """Tensor part of the bracket of two even elements (before reduction)."""
        n = self.system.dim
        zero = self.system.field.zero
        out = [zero] * self.tensor_dim
        for ca, coef_a in enumerate(tensor_a):
            if coef_a == zero:
                continue
            i, j = divmod(ca, n)
            for cb, coef_b in enumerate(tensor_b):
                if coef_b == zero:
                    continue
                k, l = divmod(cb, n)
                coef = coef_a * coef_b
                for m, cc in self.system.basis_product(i, j, k).items():
                    out[m * n + l] = out[m * n + l] + coef * cc
                for m, cc in self.system.basis_product(i, j, l).items():
                    out[m * n + k] = out[m * n + k] - coef * cc
        return tuple(out)

    # -- quotient brackets ------------------------------------------------------

    def bracket_even_even(self, u_coords, v_coords) -> tuple:
        return self.reduce_tensor(self.tensor_bracket(self.lift(u_coords), self.lift(v_coords)))

    def bracket_even_odd(self, u_coords, w) -> tuple:
        return self.phi_apply(self.lift(u_coords), w)

    def bracket_odd_even(self, z, v_coords) -> tuple:
        return self.psi_apply(self.lift(v_coords), z)

    def bracket_odd_odd(self, z, w) -> tuple:
        return self.reduce_tensor(self.tensor_of_pair(z, w))

    # -- grading of the even part ------------------------------------------------

    def components(self) -> dict[GroupElement, Subspace]:
        """Nonzero homogeneous components of the even part, keyed by degree.

        The component of degree g is the span of the images of all tensors
        b_i (x) b_j with deg(i) deg(j) = g, i.e. the sum over h of the
        bracket images of E_h with E_{h^-1 g}.
        """
        if self._components is None:
            buckets: dict[GroupElement, list] = {}
            for c in range(self.tensor_dim):
                g = self._tensor_degrees[c]
                buckets.setdefault(g, []).append(self._reduction.rows[c])
            comps = {}
            for g in sorted(buckets):
                sub = Subspace(self.system.field, self.dim_even, buckets[g])
                if not sub.is_zero():
                    comps[g] = sub
            self._components = comps
            self._certify_direct_sum()
        return self._components

    def component(self, g: GroupElement) -> Subspace:
        return self.components().get(g, Subspace.zero(self.system.field, self.dim_even))

    def support(self) -> tuple[GroupElement, ...]:
        """Nonidentity degrees with a nonzero even component, sorted."""
        if self._support is None:
            self._support = tuple(
                g for g in sorted(self.components()) if not g.is_identity()
            )
        return self._support

    def _certify_direct_sum(self):
        comps = self._components
        total = Subspace.zero(self.system.field, self.dim_even)
        dims = 0
        for g, sub in comps.items():
            total = total.sum(sub)
            dims += sub.dim
        if dims != self.dim_even or total.dim != self.dim_even:
            raise DecompositionFailure(
                "homogeneous components of the even part do not decompose it directly",
                witness={
                    "component_dims": {g.format(): sub.dim for g, sub in comps.items()},
                    "even_dim": self.dim_even,
                },
            )

    def verify_even_grading(self) -> list[dict]:
        """Check [L0_g, L0_h] lands in L0_{gh} for all component pairs."""
        violations = []
        comps = self.components()
        zero = self.system.field.zero
        for g, cg in comps.items():
            for h, ch in comps.items():
                target = self.component(g.compose(h))
                for u in cg.basis.rows:
                    for v in ch.basis.rows:
                        w = self.bracket_even_even(u, v)
                        if any(x != zero for x in w) and not target.contains(w):
                            violations.append(
                                {
                                    "degrees": (g.format(), h.format()),
                                    "bracket": [self.system.field.format(x) for x in w],
                                }
                            )
        return violations

    def __repr__(self):
        return (
            f"StandardEmbedding(dim_even={self.dim_even}, "
            f"null_dim={self.null_space.dim}, system_dim={self.system.dim})"
        )


def build_embedding(system: GradedTripleSystem) -> StandardEmbedding:
    """Construct and certify the standard embedding of a verified system.

    Raises:
        NotWellDefined: bracketing the tensor square into N escapes N, so
            the bracket does not descend to the quotient (witness attached).
        LeibnizIdentityFailure: the quotient algebra fails the right
            Leibniz identity on some basis triple (witness attached).
    """
    field = system.field
    n = system.dim
    nn = n * n
    zero = field.zero

    # Stack the matrices of phi and psi; N is the joint kernel.
    rows = []
    for w in range(n):
        for out in range(n):
            row = [zero] * nn
            nonzero = False
            for i in range(n):
                for j in range(n):
                    c = system.basis_product(i, j, w).get(out)
                    if c is not None:
                        row[i * n + j] = c
                        nonzero = True
            if nonzero:
                rows.append(row)
    for z in range(n):
        for out in range(n):
            row = [zero] * nn
            nonzero = False
            for i in range(n):
                for j in range(n):
                    c = system.basis_product(z, i, j).get(out, zero) - system.basis_product(
                        z, j, i
                    ).get(out, zero)
                    if c != zero:
                        row[i * n + j] = c
                        nonzero = True
            if nonzero:
                rows.append(row)
    action_matrix = Matrix(field, rows, ncols=nn)
    null_space = kernel(action_matrix)

    # Greedy standard-tensor complement: deterministic coset representatives.
    coset_space = complete_complement(null_space, Subspace.full(field, nn))
    coset_indices = tuple(coset_space.pivots)

    # Reduction matrix: coordinates in the (N basis | coset basis) frame,
    # keeping only the coset block.
    frame = Matrix.vstack(
        field, [null_space.basis, coset_space.basis], ncols=nn
    )
    frame_inv = invert(frame)
    r = null_space.dim
    reduction = Matrix(
        field,
        [row[r:] for row in frame_inv.rows],
        ncols=len(coset_indices),
    )

    emb = StandardEmbedding(system, nn, null_space, coset_indices, reduction)

    _certify_descent(emb)
    _certify_leibniz_identity(emb)
    return emb


def _certify_descent(emb: StandardEmbedding):
    """Certify the bracket descends to the tensor-square quotient.

    Checks, for every null-space basis vector nu and every coordinate
    tensor t: [t, nu] and [nu, t] stay in N, and both E-valued actions of
    nu vanish.  With N = ker(phi) & ker(psi) the actions vanish by
    construction, but they are rechecked directly against the structure
    constants as a guard against construction bugs.
    """
    system = emb.system
    n = system.dim
    zero = system.field.zero
    one = system.field.one
    basis_vecs = [
        tuple(one if t == idx else zero for t in range(n)) for idx in range(n)
    ]
    for nu in emb.null_space.basis.rows:
        for w in basis_vecs:
            if any(x != zero for x in emb.phi_apply(nu, w)):
                raise NotWellDefined(
                    "left action of a null tensor does not vanish",
                    witness={"tensor": [system.field.format(x) for x in nu]},
                )
            if any(x != zero for x in emb.psi_apply(nu, w)):
                raise NotWellDefined(
                    "twisted right action of a null tensor does not vanish",
                    witness={"tensor": [system.field.format(x) for x in nu]},
                )
        for c in range(emb.tensor_dim):
            coord_tensor = tuple(one if t == c else zero for t in range(emb.tensor_dim))
            outward = emb.tensor_bracket(coord_tensor, nu)
            if not emb.null_space.contains(outward):
                raise NotWellDefined(
                    "bracket of the tensor square into the null space escapes it",
                    witness={
                        "coordinate": c,
                        "null_vector": [system.field.format(x) for x in nu],
                        "bracket": [system.field.format(x) for x in outward],
                    },
                )
            inward = emb.tensor_bracket(nu, coord_tensor)
            if not emb.null_space.contains(inward):
                raise NotWellDefined(
                    "bracket of the null space into the tensor square escapes it",
                    witness={
                        "coordinate": c,
                        "null_vector": [system.field.format(x) for x in nu],
                    },
                )


def _certify_leibniz_identity(emb: StandardEmbedding):
    """Sweep the right Leibniz identity over all basis triples of L0 + L1.

    Elements of L are coordinate vectors of length dim_even + dim; the
    bracket table on basis elements is precomputed once and the identity
    [[y,z],x] = [[y,x],z] + [y,[z,x]] is evaluated exactly.
    """
    system = emb.system
    field = system.field
    zero, one = field.zero, field.one
    s = emb.dim_even
    n = system.dim
    m = s + n

    def unit(k, size):
        return tuple(one if t == k else zero for t in range(size))

    table = [[None] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a < s and b < s:
                even = emb.bracket_even_even(unit(a, s), unit(b, s))
                odd = (zero,) * n
            elif a < s:
                even = (zero,) * s
                odd = emb.bracket_even_odd(unit(a, s), unit(b - s, n))
            elif b < s:
                even = (zero,) * s
                odd = emb.bracket_odd_even(unit(a - s, n), unit(b, s))
            else:
                even = emb.bracket_odd_odd(unit(a - s, n), unit(b - s, n))
                odd = (zero,) * n
            table[a][b] = even + odd

    def apply_right(vec, x):
        # [v, e_x] for a general element v, via the precomputed table.
        out = [zero] * m
        for l, coef in enumerate(vec):
            if coef != zero:
                row = table[l][x]
                for t, c in enumerate(row):
                    if c != zero:
                        out[t] = out[t] + coef * c
        return out

    for y, z, x in product(range(m), repeat=3):
        lhs = apply_right(table[y][z], x)
        rhs_a = apply_right(table[y][x], z)
        # [y, [z, x]] with the inner bracket expanded over basis elements.
        rhs_b = [zero] * m
        inner = table[z][x]
        for l, coef in enumerate(inner):
            if coef != zero:
                row = table[y][l]
                for t, c in enumerate(row):
                    if c != zero:
                        rhs_b[t] = rhs_b[t] + coef * c
        if any(lhs[t] != rhs_a[t] + rhs_b[t] for t in range(m)):
            raise LeibnizIdentityFailure(
                "quotient algebra fails the right Leibniz identity",
                witness={"triple": (y, z, x)},
            )
