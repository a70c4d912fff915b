"""Dense complex matrix helpers: projectors, Hermitian unitaries, JSON encoding."""

import numpy as np

from reflectory.config import RCOND_MIN, REPAIR_WINDOW, TOL_STRUCT, make_rng
from reflectory.errors import (DegenerateSpan, ProjectorError, RankError,
                               SingularMatrix, UnitarityError)


def dagger(A):
    return np.conj(np.swapaxes(A, -1, -2))


def fro(A):
    return float(np.linalg.norm(A))


def as_matrix(A):
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def projector_rank(P):
    return int(round(float(np.trace(P).real)))


def is_projector(P, tol=TOL_STRUCT, rank=None):
    P = np.asarray(P, dtype=complex)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        return False
    ok = fro(P - dagger(P)) <= tol and fro(P @ P - P) <= tol
    if ok and rank is not None:
        ok = abs(np.trace(P).real - rank) <= tol
    return bool(ok)


def check_projector(P, tol=TOL_STRUCT, rank=None):
    """Validate a Hermitian projector (optionally of fixed rank) and return it as an array."""
    P = as_matrix(P)
    if P.shape[0] != P.shape[1]:
        raise ProjectorError(f"projector must be square, got {P.shape}")
    herm = fro(P - dagger(P))
    idem = fro(P @ P - P)
    if herm > tol or idem > tol:
        raise ProjectorError(
            f"not a Hermitian projector: |P-P*|={herm:.2e}, |P^2-P|={idem:.2e}")
    if rank is not None and abs(np.trace(P).real - rank) > tol:
        raise RankError(f"expected rank {rank}, trace is {np.trace(P).real:.6g}")
    return P


def repair_projector(P, window=REPAIR_WINDOW):
    """Snap a nearly-projector back onto P(n).

    Eigenvalues of the Hermitian part within ``window`` of 0 or 1 are rounded;
    anything else means the input was not a projector to begin with.
    """
    H = 0.5 * (P + dagger(P))
    w, V = np.linalg.eigh(H)
    near0 = np.abs(w) <= window
    near1 = np.abs(w - 1.0) <= window
    if not np.all(near0 | near1):
        bad = w[~(near0 | near1)]
        raise ProjectorError(f"eigenvalues {bad} are not within {window} of 0 or 1")
    Vk = V[:, near1]
    return Vk @ dagger(Vk)


def projector_from_span(vectors):
    """Orthogonal projector onto the span of ``vectors`` (a sequence of n-vectors).

    Raises DegenerateSpan if the vectors are zero or linearly dependent.
    """
    A = np.atleast_2d(np.asarray(vectors, dtype=complex)).T  # columns
    n, k = A.shape
    if k == 0:
        raise DegenerateSpan("no vectors given")
    G = dagger(A) @ A
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0.0 or s[-1] <= 1e-12 * max(1.0, s[0]) or k > n:
        raise DegenerateSpan(f"{k} vectors span a space of smaller dimension")
    P = A @ np.linalg.solve(G, dagger(A))
    return 0.5 * (P + dagger(P))


def haar_unitary(n, rng):
    """Unitary factor of a complex Gaussian matrix with the R-diagonal phase fixed."""
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    d = np.diag(R)
    ph = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return Q * ph[None, :]


def coordinate_projector(n, k):
    """E_k = diag(1,...,1,0,...,0) with k ones."""
    E = np.zeros((n, n), dtype=complex)
    E[np.arange(k), np.arange(k)] = 1.0
    return E


def random_projector(n, k, seed):
    """Seeded rank-k projector V E_k V* with V Haar-like; ``seed`` may be an int or a Generator."""
    if not 0 <= k <= n:
        raise RankError(f"rank {k} out of range for n={n}")
    rng = make_rng(seed)
    V = haar_unitary(n, rng)
    Vk = V[:, :k]
    P = Vk @ dagger(Vk)
    return 0.5 * (P + dagger(P))


def check_unitary(V, tol=TOL_STRUCT):
    V = as_matrix(V)
    n = V.shape[0]
    if V.shape != (n, n) or fro(V @ dagger(V) - np.eye(n)) > tol:
        raise UnitarityError("matrix is not unitary")
    return V


def check_hermitian_unitary(U, tol=TOL_STRUCT):
    U = check_unitary(U, tol)
    if fro(U - dagger(U)) > tol:
        raise UnitarityError("unitary is not Hermitian")
    return U


def hermitian_unitary(n, subset, conjugator=None):
    """V I_S V* where I_S = diag(d_i), d_i = 1 for i in ``subset`` (1-based) else -1."""
    subset = set(int(i) for i in subset)
    if not subset <= set(range(1, n + 1)):
        raise ValueError(f"subset {sorted(subset)} not contained in 1..{n}")
    d = np.array([1.0 if i + 1 in subset else -1.0 for i in range(n)])
    U = np.diag(d).astype(complex)
    if conjugator is not None:
        V = check_unitary(conjugator)
        U = V @ U @ dagger(V)
        U = 0.5 * (U + dagger(U))
    return U


def random_hermitian_unitary(n, seed, subset=None):
    rng = make_rng(seed)
    if subset is None:
        size = int(rng.integers(0, n + 1))
        subset = set((rng.permutation(n)[:size] + 1).tolist())
    return hermitian_unitary(n, subset, haar_unitary(n, rng))


def safe_inverse(A):
    """Partial-pivoting LU inverse; raises SingularMatrix below RCOND_MIN."""
    A = as_matrix(A)
    try:
        inv = np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix("matrix is exactly singular", rcond=0.0) from exc
    rcond = 1.0 / (np.linalg.norm(A, 1) * np.linalg.norm(inv, 1))
    if rcond < RCOND_MIN:
        raise SingularMatrix(f"reciprocal condition {rcond:.2e} below {RCOND_MIN}",
                             rcond=rcond)
    return inv


def matrix_to_json(A):
    A = np.asarray(A, dtype=complex)
    rows, cols = A.shape
    return {"rows": rows, "cols": cols,
            "data": [[float(x.real), float(x.imag)] for x in A.reshape(-1)]}


def matrix_from_json(obj):
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
    flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    return as_matrix(flat.reshape(rows, cols))
