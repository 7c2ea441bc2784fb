"""Independent oracles for the test-suite.

These deliberately avoid the code paths they are used to check: the homology
oracle works on exterior powers with its own boundary matrices, and the
commutator oracle runs its own closure loop instead of the kernel-pair
construction.
"""

from itertools import combinations

from centrex.linalg import Matrix, Subspace, rref


def chevalley_eilenberg_h2_dim(a):
    """dim H_2 of a Lie algebra with trivial coefficients.

    ker(d2: /\\^2 g -> g) modulo im(d3: /\\^3 g -> /\\^2 g) with
    d2(x^y) = [x,y] and d3(x^y^z) = [x,y]^z - [x,z]^y + [y,z]^x.
    """
    f = a.field
    n = a.dim
    pairs = list(combinations(range(n), 2))
    triples = list(combinations(range(n), 3))
    pair_index = {p: t for t, p in enumerate(pairs)}

    def wedge_coeffs(vec, k):
        """Coefficients of (sum vec_m e_m) ^ e_k in the pair basis."""
        out = [f.zero] * len(pairs)
        for m, c in enumerate(vec):
            if c == f.zero or m == k:
                continue
            if m < k:
                out[pair_index[(m, k)]] = f.add(out[pair_index[(m, k)]], c)
            else:
                out[pair_index[(k, m)]] = f.sub(out[pair_index[(k, m)]], c)
        return out

    d2_rows = [a.sc[i][j] for (i, j) in pairs]
    d2 = Matrix.from_rows_shaped(f, d2_rows, n)

    d3_rows = []
    for (i, j, k) in triples:
        row = [f.zero] * len(pairs)
        for vec, t in ((a.sc[i][j], k), (a.sc[j][k], i)):
            for idx, c in enumerate(wedge_coeffs(vec, t)):
                row[idx] = f.add(row[idx], c)
        for idx, c in enumerate(wedge_coeffs(a.sc[i][k], j)):
            row[idx] = f.sub(row[idx], c)
        d3_rows.append(row)
    d3 = Matrix.from_rows_shaped(f, d3_rows, len(pairs))

    # im d3 must sit inside ker d2 for the quotient to make sense
    boundary = d3.mul(d2)
    assert boundary.is_zero(), "d2 after d3 did not vanish"

    _, rank_d2 = rref(d2)
    _, rank_d3 = rref(d3)
    ker_d2_dim = len(pairs) - rank_d2
    return ker_d2_dim - rank_d3


def direct_commutator_vect(e):
    """Ideal generated by {[k,b], [b,k]} over kernel and domain bases,
    closed by a plain fixpoint loop."""
    b = e.domain
    f = b.field
    gens = []
    for k_vec in e.kernel.subspace.basis.entries:
        for j in range(b.dim):
            ej = b.basis_vector(j)
            gens.append(b.bracket(k_vec, ej))
            gens.append(b.bracket(ej, k_vec))
    current = Subspace.from_vectors(f, b.dim, gens)
    while True:
        extra = []
        for v in current.basis.entries:
            for j in range(b.dim):
                ej = b.basis_vector(j)
                extra.append(b.bracket(v, ej))
                extra.append(b.bracket(ej, v))
        bigger = Subspace.from_vectors(
            f, b.dim, list(current.basis.entries) + extra)
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def multiplication_rank(a):
    """Rank of the bracket viewed as a dim^2 x dim matrix, built by hand."""
    rows = [a.sc[i][j] for i in range(a.dim) for j in range(a.dim)]
    _, rank = rref(Matrix.from_rows_shaped(a.field, rows, a.dim))
    return rank
