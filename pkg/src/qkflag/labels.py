"""Naming of Schubert basis elements: reduced words, and partitions on
type-A Grassmannians.

On Gr(k, n) (family A, a single omitted node k) the minimal representatives
correspond to partitions inside the k x (n-k) box; the partition is read
off the one-line permutation as lambda_j = w(k+1-j) - (k+1-j).
"""

from .cartan import FlagVariety


def one_line(w, n):
    """One-line notation of a type-A Weyl element as a permutation of 1..n."""
    p = list(range(1, n + 1))
    for i in w.word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return p


def grassmannian_box(X):
    """(k, n) for X = Gr(k, n), else None."""
    rs = X.root_system
    free = X.degree_indices()
    if rs.family != "A" or len(free) != 1:
        return None
    return free[0], rs.rank + 1


def partition_maps(X):
    """Bidirectional maps between partitions and minimal representatives."""
    if not hasattr(X, "_partition_maps"):
        box = grassmannian_box(X)
        if box is None:
            raise ValueError(
                "partition labels only apply to type-A Grassmannians")
        k, n = box
        to_part = {}
        for w in X.coset_reps:
            ol = one_line(w, n)
            lam = tuple(ol[k - j] - (k + 1 - j) for j in range(1, k + 1))
            lam = tuple(x for x in lam if x)
            to_part[w] = lam
        X._partition_maps = (to_part, {lam: w for w, lam in to_part.items()})
    return X._partition_maps


def basis_label(X, w):
    """Canonical label of a basis element: "[2,1]" on Grassmannians,
    otherwise the reduced word "s2.s1" ("e" for the identity)."""
    if grassmannian_box(X) is not None:
        lam = partition_maps(X)[0][w]
        return "[%s]" % ",".join(str(x) for x in lam)
    return w.label()


def element_from_word(X, word_text):
    """Weyl element of a dotted word like "s1.s2" or "e"; must lie in W^P."""
    W = X.group
    w = W.identity
    if word_text not in ("", "e"):
        for tok in word_text.split("."):
            if not tok.startswith("s") or not tok[1:].isdigit():
                raise ValueError("malformed word %r" % (word_text,))
            i = int(tok[1:])
            if not 1 <= i <= X.root_system.rank:
                raise ValueError("no simple reflection s%d" % i)
            w = w.times_simple(i)
    if not X.is_rep(w):
        raise ValueError(
            "%s is not a minimal coset representative of this space"
            % (w.label(),))
    return w


def element_from_partition(X, lam):
    box = grassmannian_box(X)
    if box is None:
        raise ValueError(
            "partition labels only apply to type-A Grassmannians")
    k, n = box
    if any(x < 0 for x in lam):
        raise ValueError("not a partition: %r" % (list(lam),))
    lam = tuple(x for x in lam if x)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("partition parts must be weakly decreasing: %r"
                         % (list(lam),))
    if len(lam) > k or any(x > n - k for x in lam):
        raise ValueError("partition %r outside the %dx%d box"
                         % (list(lam), k, n - k))
    return partition_maps(X)[1][lam]
