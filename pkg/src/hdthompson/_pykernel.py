"""Pure-Python pattern kernels.

A pattern is stored as ``(rects, k)``: ``rects[n]`` is the rectangle numbered
``n`` written as ``(square, xn, xe, yn, ye)``, and every square ``i >= k`` is a
single whole rectangle numbered ``i + len(rects) - k``. The canonical form has
the smallest possible ``k``.

This module is the reference for ``_ckernel.pyx``; both expose the same
functions with the same results.
"""

WHOLE = (0, 0, 0, 0)


def canon(rects, k):
    n = len(rects)
    while n and rects[n - 1][0] == k - 1 and rects[n - 1][1:] == WHOLE:
        n -= 1
        k -= 1
    return tuple(rects[:n]), k


def apply_letters(rects, k, codes):
    """Right multiply by generators; ``codes`` holds ``(kind, i)`` with kind 0=v, 1=h, 2=sigma."""
    rects = list(rects)
    for kind, i in codes:
        need = i + 2 if kind == 2 else i + 1
        while len(rects) < need:
            rects.append((k, 0, 0, 0, 0))
            k += 1
        if kind == 2:
            rects[i], rects[i + 1] = rects[i + 1], rects[i]
        else:
            s, xn, xe, yn, ye = rects[i]
            if kind == 0:
                rects[i:i + 1] = [(s, 2 * xn, xe + 1, yn, ye), (s, 2 * xn + 1, xe + 1, yn, ye)]
            else:
                rects[i:i + 1] = [(s, xn, xe, 2 * yn, ye + 1), (s, xn, xe, 2 * yn + 1, ye + 1)]
    return canon(rects, k)


def compose(pr, pk, qr, qk):
    """The product P.Q: rectangle n of the result is the P-image of Q's rectangle n."""
    np_ = len(pr)
    qr = list(qr)
    while qk < np_:
        qr.append((qk, 0, 0, 0, 0))
        qk += 1
    out = []
    for s, xn, xe, yn, ye in qr:
        if s < np_:
            t, pxn, pxe, pyn, pye = pr[s]
            out.append((t, (pxn << xe) + xn, pxe + xe, (pyn << ye) + yn, pye + ye))
        else:
            out.append((s - np_ + pk, xn, xe, yn, ye))
    return canon(out, qk - (np_ - pk))


def left_quotient(cr, ck, lr, lk):
    """Return K with C.K = L, or None when L does not refine C."""
    cr = list(cr)
    lr = list(lr)
    while ck < lk:
        cr.append((ck, 0, 0, 0, 0))
        ck += 1
    while lk < ck:
        lr.append((lk, 0, 0, 0, 0))
        lk += 1
    if len(lr) < len(cr):
        return None
    bysq = [[] for _ in range(ck)]
    for s, r in enumerate(cr):
        bysq[r[0]].append((s, r))
    out = []
    for t, xn, xe, yn, ye in lr:
        hit = None
        for s, (_, cxn, cxe, cyn, cye) in bysq[t]:
            dx = xe - cxe
            dy = ye - cye
            if dx >= 0 and dy >= 0 and (xn >> dx) == cxn and (yn >> dy) == cyn:
                hit = (s, xn & ((1 << dx) - 1), dx, yn & ((1 << dy) - 1), dy)
                break
        if hit is None:
            return None
        out.append(hit)
    return canon(out, len(cr))


def right_quotient(lr, lk, kr, kk):
    """Return C with C.K = L, or None when no such C exists."""
    lr = list(lr)
    while len(lr) < len(kr):
        lr.append((lk, 0, 0, 0, 0))
        lk += 1
    off_k = len(kr) - kk
    off_l = len(lr) - lk
    if off_l < off_k:
        return None
    size = max(kk, len(lr) - off_k)
    c = [None] * size
    for n, (s, xn, xe, yn, ye) in enumerate(kr):
        t, lxn, lxe, lyn, lye = lr[n]
        cxe = lxe - xe
        cye = lye - ye
        if cxe < 0 or cye < 0:
            return None
        if (lxn & ((1 << xe) - 1)) != xn or (lyn & ((1 << ye) - 1)) != yn:
            return None
        r = (t, lxn >> xe, cxe, lyn >> ye, cye)
        if c[s] is None:
            c[s] = r
        elif c[s] != r:
            return None
    for s in range(kk, size):
        c[s] = lr[s + off_k]
    return canon(c, size - off_l + off_k)
