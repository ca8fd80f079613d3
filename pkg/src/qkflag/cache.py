"""Optional on-disk persistence of Schubert restriction tables.

Tables are stored as versioned, content-addressed JSON files keyed by
(family, rank, Delta_P, theory, convention version).  A missing or
unreadable file is a silent cache miss; writes are atomic
(write-temp-then-rename).  Persistence is off until a directory is set.
"""

import hashlib
import json
import os
import tempfile
from fractions import Fraction

CONVENTION_VERSION = 1

_cache_dir = None


def set_cache_dir(path):
    """Enable (or with None, disable) table persistence."""
    global _cache_dir
    _cache_dir = path
    if path:
        os.makedirs(path, exist_ok=True)


def get_cache_dir():
    return _cache_dir


def _filename(rs, dp, theory):
    key = "%s|%d|%s|%s|v%d" % (rs.family, rs.rank,
                               ",".join(str(i) for i in dp), theory,
                               CONVENTION_VERSION)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    dptxt = "".join(str(i) for i in dp) or "B"
    return "%s%d_%s_%s_v%d_%s.json" % (rs.family, rs.rank, dptxt, theory,
                                       CONVENTION_VERSION, digest)


def _poly_to_json(p):
    return {",".join(str(x) for x in e): str(c) for e, c in p.terms.items()}


def _poly_from_json(d, rank):
    from .algebra import LaurentPoly
    p = LaurentPoly(rank)
    for es, cs in d.items():
        e = tuple(int(x) for x in es.split(",")) if es else ()
        p.terms[e] = Fraction(cs)
    return p


def store_table(rs, dp, theory, table):
    if _cache_dir is None:
        return
    payload = {
        "version": CONVENTION_VERSION,
        "family": rs.family,
        "rank": rs.rank,
        "delta_p": list(dp),
        "theory": theory,
        "classes": {
            w.label(): {v.label(): _poly_to_json(p)
                        for v, p in row.items() if not p.is_zero()}
            for w, row in table.items()
        },
    }
    path = os.path.join(_cache_dir, _filename(rs, dp, theory))
    fd, tmp = tempfile.mkstemp(dir=_cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def load_table(rs, dp, theory):
    if _cache_dir is None:
        return None
    from .algebra import LaurentPoly
    from .cartan import weyl_group
    path = os.path.join(_cache_dir, _filename(rs, dp, theory))
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return None
    if payload.get("version") != CONVENTION_VERSION:
        return None
    by_label = {w.label(): w for w in weyl_group(rs).elements}
    rank = rs.rank
    zero = LaurentPoly.zero(rank)
    if dp:
        from .cartan import flag_variety
        points = flag_variety(rs, dp).coset_reps
    else:
        points = weyl_group(rs).elements
    table = {}
    try:
        for wl, row in payload["classes"].items():
            w = by_label[wl]
            table[w] = {v: zero for v in points}
            for vl, pd in row.items():
                table[w][by_label[vl]] = _poly_from_json(pd, rank)
    except KeyError:
        return None
    return table
