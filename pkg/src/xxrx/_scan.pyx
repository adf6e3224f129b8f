# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernels.

Same entry points as ``_scan_py``; words arrive as ASCII bytes of
b'0'/b'1' (callers validate the alphabet).
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_GET_SIZE


cdef inline bint _hit_xxrx(const unsigned char *s, Py_ssize_t i, Py_ssize_t t) noexcept nogil:
    # blocks: s[i..i+t) = x, s[i+t..i+2t) = x reversed, s[i+2t..i+3t) = x
    cdef Py_ssize_t a
    for a in range(t):
        if s[i + t + a] != s[i + t - 1 - a]:
            return False
    for a in range(t):
        if s[i + 2 * t + a] != s[i + a]:
            return False
    return True


cdef inline bint _hit_xxxr(const unsigned char *s, Py_ssize_t i, Py_ssize_t t) noexcept nogil:
    cdef Py_ssize_t a
    for a in range(t):
        if s[i + t + a] != s[i + a]:
            return False
    for a in range(t):
        if s[i + 2 * t + a] != s[i + t - 1 - a]:
            return False
    return True


cdef bint _has_xxrx(const unsigned char *s, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t t, i
    for t in range(1, n // 3 + 1):
        for i in range(n - 3 * t + 1):
            if _hit_xxrx(s, i, t):
                return True
    return False


def scan_xxrx(bytes w):
    """First (block length, then start) occurrence of x x^R x, or None."""
    cdef const unsigned char *s = <const unsigned char *> PyBytes_AS_STRING(w)
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    cdef Py_ssize_t t, i
    for t in range(1, n // 3 + 1):
        for i in range(n - 3 * t + 1):
            if _hit_xxrx(s, i, t):
                return (i, t)
    return None


def scan_xxxr(bytes w):
    """First (block length, then start) occurrence of x x x^R, or None."""
    cdef const unsigned char *s = <const unsigned char *> PyBytes_AS_STRING(w)
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    cdef Py_ssize_t t, i
    for t in range(1, n // 3 + 1):
        for i in range(n - 3 * t + 1):
            if _hit_xxxr(s, i, t):
                return (i, t)
    return None


def profile_of(bytes w):
    """Block-length profile of a word with no triple letter.

    Raises ValueError if the word contains 000 or 111 (adjacent doubled
    letters), since the factorization is undefined there.
    """
    cdef const unsigned char *s = <const unsigned char *> PyBytes_AS_STRING(w)
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    if n == 0:
        return []
    cdef Py_ssize_t p, prev = -1
    out = []
    for p in range(n - 1):
        if s[p] == s[p + 1]:
            if prev >= 0 and p - prev < 2:
                raise ValueError("word contains a triple letter")
            out.append(p + 1 if prev < 0 else p - prev)
            prev = p
    out.append(n if prev < 0 else n - 1 - prev)
    return out


def is_member(bytes w):
    """Linear-time membership in the xx^Rx-avoiding language.

    Single pass: reject any triple letter, then stream the profile entries
    and reject on the first valley (previous >= current <= next).
    """
    cdef const unsigned char *s = <const unsigned char *> PyBytes_AS_STRING(w)
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    if n == 0:
        return True
    cdef Py_ssize_t p, prev = -1
    cdef Py_ssize_t e2 = -1, e1 = -1, entry
    for p in range(n - 1):
        if s[p] == s[p + 1]:
            if prev >= 0 and p - prev < 2:
                return False
            entry = p + 1 if prev < 0 else p - prev
            if e2 >= 0 and e2 >= e1 and e1 <= entry:
                return False
            e2 = e1
            e1 = entry
            prev = p
    entry = n if prev < 0 else n - 1 - prev
    if e2 >= 0 and e2 >= e1 and e1 <= entry:
        return False
    return True


def count_members(Py_ssize_t n):
    """Number of length-n words with no x x^R x instance, by full
    enumeration of all 2^n words with the direct scan."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > 60:
        raise ValueError("enumeration limited to n <= 60")
    cdef unsigned long long total = 1ULL << n
    cdef unsigned long long val, v
    cdef unsigned char buf[64]
    cdef Py_ssize_t b
    cdef long long count = 0
    with nogil:
        for val in range(total):
            v = val
            for b in range(n):
                buf[n - 1 - b] = 48 + <unsigned char> (v & 1)
                v >>= 1
            if not _has_xxrx(buf, n):
                count += 1
    return count
