"""Pure-Python implementations of the hot permutation kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same results; :mod:`sdmaps.kernels` picks one at import.
"""


def orbit_labels(perm):
    """Label the cycles of ``perm``.

    Cycles are numbered in increasing order of their smallest element, so the
    labelling depends only on the permutation.  Returns ``(labels, count)``.
    """
    n = len(perm)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        d = start
        while labels[d] == -1:
            labels[d] = count
            d = perm[d]
        count += 1
    return labels, count


def extend_morphism(src_alpha, src_sigma, tgt_alpha, tgt_sigma, root, image):
    """Propagate ``root -> image`` to a dart bijection, or return ``None``.

    The result ``psi`` satisfies ``psi[src_alpha[d]] == tgt_alpha[psi[d]]``
    and ``psi[src_sigma[d]] == tgt_sigma[psi[d]]`` for every dart.  Pass the
    inverse target rotation to search for orientation-reversing morphisms.
    The source must be connected.
    """
    n = len(src_alpha)
    if len(tgt_alpha) != n:
        return None
    psi = [-1] * n
    used = [False] * n
    psi[root] = image
    used[image] = True
    stack = [root]
    while stack:
        d = stack.pop()
        pd = psi[d]
        for e, f in ((src_alpha[d], tgt_alpha[pd]), (src_sigma[d], tgt_sigma[pd])):
            pe = psi[e]
            if pe == -1:
                if used[f]:
                    return None
                psi[e] = f
                used[f] = True
                stack.append(e)
            elif pe != f:
                return None
    return psi


def traversal_code(alpha, sigma, root):
    """Relabel darts in first-visit order from ``root`` and return the code.

    The code is ``sigma`` followed by ``alpha`` in the new labels, as one
    flat tuple.  Two rooted maps are isomorphic (orientation preserving,
    root to root) exactly when their codes agree.
    """
    n = len(alpha)
    new = [-1] * n
    order = [root]
    new[root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (sigma[d], alpha[d]):
            if new[e] == -1:
                new[e] = len(order)
                order.append(e)
    if len(order) != n:
        return None
    code = [0] * (2 * n)
    for k, d in enumerate(order):
        code[k] = new[sigma[d]]
        code[n + k] = new[alpha[d]]
    return tuple(code)
