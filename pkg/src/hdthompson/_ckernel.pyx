# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled pattern kernels; same contract as ``_pykernel``.

Coordinates live in C ``long long`` arrays. Any exponent above ``MAXEXP``
raises OverflowError so the caller can retry with the Python kernel.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef enum:
    MAXEXP = 60

ctypedef struct R:
    long long s, xn, xe, yn, ye


cdef class _Buf:
    cdef R* a
    cdef Py_ssize_t n, cap

    def __cinit__(self, Py_ssize_t cap):
        if cap < 4:
            cap = 4
        self.a = <R*> PyMem_Malloc(cap * sizeof(R))
        if self.a == NULL:
            raise MemoryError()
        self.n = 0
        self.cap = cap

    def __dealloc__(self):
        PyMem_Free(self.a)

    cdef int grow(self, Py_ssize_t need) except -1:
        cdef R* b
        cdef Py_ssize_t cap = self.cap
        if need <= cap:
            return 0
        while cap < need:
            cap *= 2
        b = <R*> PyMem_Malloc(cap * sizeof(R))
        if b == NULL:
            raise MemoryError()
        for i in range(self.n):
            b[i] = self.a[i]
        PyMem_Free(self.a)
        self.a = b
        self.cap = cap
        return 0

    cdef int push(self, long long s, long long xn, long long xe, long long yn, long long ye) except -1:
        if xe > MAXEXP or ye > MAXEXP:
            raise OverflowError("exponent too large for the compiled kernel")
        self.grow(self.n + 1)
        self.a[self.n].s = s
        self.a[self.n].xn = xn
        self.a[self.n].xe = xe
        self.a[self.n].yn = yn
        self.a[self.n].ye = ye
        self.n += 1
        return 0


cdef _Buf load(rects):
    cdef _Buf b = _Buf(len(rects) + 8)
    for r in rects:
        b.push(r[0], r[1], r[2], r[3], r[4])
    return b


cdef tuple dump(_Buf b, long long k):
    cdef Py_ssize_t n = b.n
    cdef R* a = b.a
    while n > 0 and a[n - 1].s == k - 1 and a[n - 1].xe == 0 and a[n - 1].ye == 0:
        n -= 1
        k -= 1
    out = [None] * n
    for i in range(n):
        out[i] = (a[i].s, a[i].xn, a[i].xe, a[i].yn, a[i].ye)
    return tuple(out), k


def canon(rects, k):
    return dump(load(rects), k)


def apply_letters(rects, long long k, codes):
    cdef _Buf b = load(rects)
    cdef long long kind, i, need, j
    cdef R r, t
    for c in codes:
        kind = c[0]
        i = c[1]
        need = i + 2 if kind == 2 else i + 1
        while b.n < need:
            b.push(k, 0, 0, 0, 0)
            k += 1
        if kind == 2:
            t = b.a[i]
            b.a[i] = b.a[i + 1]
            b.a[i + 1] = t
            continue
        r = b.a[i]
        if r.xe >= MAXEXP or r.ye >= MAXEXP:
            raise OverflowError("exponent too large for the compiled kernel")
        b.grow(b.n + 1)
        j = b.n
        while j > i + 1:
            b.a[j] = b.a[j - 1]
            j -= 1
        b.n += 1
        if kind == 0:
            b.a[i].xn = 2 * r.xn
            b.a[i].xe = r.xe + 1
            b.a[i + 1] = b.a[i]
            b.a[i + 1].xn = 2 * r.xn + 1
        else:
            b.a[i].yn = 2 * r.yn
            b.a[i].ye = r.ye + 1
            b.a[i + 1] = b.a[i]
            b.a[i + 1].yn = 2 * r.yn + 1
    return dump(b, k)


def compose(pr, long long pk, qr, long long qk):
    cdef _Buf p = load(pr)
    cdef _Buf q = load(qr)
    cdef Py_ssize_t np_ = p.n
    cdef _Buf out
    cdef R a, c
    while qk < np_:
        q.push(qk, 0, 0, 0, 0)
        qk += 1
    out = _Buf(q.n)
    for i in range(q.n):
        a = q.a[i]
        if a.s < np_:
            c = p.a[a.s]
            if c.xe + a.xe > MAXEXP or c.ye + a.ye > MAXEXP:
                raise OverflowError("exponent too large for the compiled kernel")
            out.push(c.s, (c.xn << a.xe) + a.xn, c.xe + a.xe, (c.yn << a.ye) + a.yn, c.ye + a.ye)
        else:
            out.push(a.s - np_ + pk, a.xn, a.xe, a.yn, a.ye)
    return dump(out, qk - (np_ - pk))


def left_quotient(cr, long long ck, lr, long long lk):
    cdef _Buf c = load(cr)
    cdef _Buf l = load(lr)
    cdef _Buf out
    cdef R a, b
    cdef long long dx, dy
    cdef Py_ssize_t i, s
    cdef bint hit
    while ck < lk:
        c.push(ck, 0, 0, 0, 0)
        ck += 1
    while lk < ck:
        l.push(lk, 0, 0, 0, 0)
        lk += 1
    if l.n < c.n:
        return None
    out = _Buf(l.n)
    for i in range(l.n):
        a = l.a[i]
        hit = False
        for s in range(c.n):
            b = c.a[s]
            if b.s != a.s:
                continue
            dx = a.xe - b.xe
            dy = a.ye - b.ye
            if dx >= 0 and dy >= 0 and (a.xn >> dx) == b.xn and (a.yn >> dy) == b.yn:
                out.push(s, a.xn & ((1LL << dx) - 1), dx, a.yn & ((1LL << dy) - 1), dy)
                hit = True
                break
        if not hit:
            return None
    return dump(out, c.n)


def right_quotient(lr, long long lk, kr, long long kk):
    cdef _Buf l = load(lr)
    cdef _Buf kb = load(kr)
    cdef _Buf c
    cdef long long off_k, off_l, size, cxe, cye
    cdef Py_ssize_t n, s
    cdef R a, b
    while l.n < kb.n:
        l.push(lk, 0, 0, 0, 0)
        lk += 1
    off_k = kb.n - kk
    off_l = l.n - lk
    if off_l < off_k:
        return None
    size = kk if kk > l.n - off_k else l.n - off_k
    c = _Buf(size)
    c.n = size
    seen = bytearray(size)
    for n in range(kb.n):
        a = kb.a[n]
        b = l.a[n]
        cxe = b.xe - a.xe
        cye = b.ye - a.ye
        if cxe < 0 or cye < 0:
            return None
        if (b.xn & ((1LL << a.xe) - 1)) != a.xn or (b.yn & ((1LL << a.ye) - 1)) != a.yn:
            return None
        s = a.s
        if seen[s]:
            if (c.a[s].s != b.s or c.a[s].xn != (b.xn >> a.xe) or c.a[s].xe != cxe
                    or c.a[s].yn != (b.yn >> a.ye) or c.a[s].ye != cye):
                return None
        else:
            seen[s] = 1
            c.a[s].s = b.s
            c.a[s].xn = b.xn >> a.xe
            c.a[s].xe = cxe
            c.a[s].yn = b.yn >> a.ye
            c.a[s].ye = cye
    for s in range(kk, size):
        c.a[s] = l.a[s + off_k]
    return dump(c, size - off_l + off_k)
