# cython: language_level=3
"""Compiled twins of the loops in boxcount._kernels.

Keys fit in a signed 64-bit int (at most 7 exponent bytes plus a degree
byte, each bounded by 126).  Coefficients stay Python ints, so results are
bit-identical to the pure kernels.
"""


def mul_terms_c(dict a, dict b, long cap, int shift):
    cdef dict out = {}
    cdef dict buckets = {}
    cdef list bucket
    cdef long ka, kb, k, d, lim
    cdef object ca, cb, cur
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for kb, cb in b.items():
        d = kb >> shift
        bucket = buckets.get(d)
        if bucket is None:
            buckets[d] = [(kb, cb)]
        else:
            bucket.append((kb, cb))
    cdef list degrees = sorted(buckets)
    for ka, ca in a.items():
        lim = cap - (ka >> shift)
        for d in degrees:
            if d > lim:
                break
            for kb, cb in <list> buckets[d]:
                k = ka + kb
                cur = out.get(k)
                if cur is None:
                    out[k] = ca * cb
                else:
                    out[k] = cur + ca * cb
    return {k: v for k, v in out.items() if v}


def scale_accumulate_c(dict dst, dict src, long key_add, object coef, long cap, int shift):
    cdef long k, kk, dadd
    cdef object v, nv, cur
    dadd = key_add >> shift
    for k, v in src.items():
        if (k >> shift) + dadd > cap:
            continue
        kk = k + key_add
        cur = dst.get(kk)
        nv = coef * v if cur is None else cur + coef * v
        if nv:
            dst[kk] = nv
        elif cur is not None:
            del dst[kk]
