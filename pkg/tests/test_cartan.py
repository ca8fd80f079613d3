import pytest

from qkflag.cartan import (CartanError, build_root_system, weyl_enumerate,
                           weyl_group, min_coset_rep, bruhat_leq,
                           inversion_count, flag_variety, parse_root_system,
                           parse_parabolic)

POSITIVE_ROOT_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
    ("B", 2): 4, ("B", 3): 9, ("C", 2): 4, ("C", 3): 9,
    ("D", 4): 12, ("G", 2): 6, ("F", 4): 24, ("E", 6): 36,
}

WEYL_ORDERS = {
    ("A", 3): 24, ("C", 2): 8, ("A", 1): 2, ("B", 3): 48, ("D", 4): 192,
    ("G", 2): 12, ("F", 4): 1152,
}


def test_a2_cartan_matrix_and_roots():
    rs = build_root_system("A", 2)
    assert rs.cartan_matrix == ((2, -1), (-1, 2))
    assert rs.num_positive_roots() == 3
    # simple root alpha_i is column i of the Cartan matrix
    assert rs.simple_roots == ((2, -1), (-1, 2))


def test_c2_roots_and_lengths():
    rs = build_root_system("C", 2)
    assert rs.num_positive_roots() == 4
    a1, a2 = rs.simple_roots
    assert rs.lengths[a1] == "short"
    assert rs.lengths[a2] == "long"


def test_a1_positive_roots():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == ((2,),)


@pytest.mark.parametrize("family,rank", sorted(POSITIVE_ROOT_COUNTS))
def test_positive_root_counts(family, rank):
    rs = build_root_system(family, rank)
    assert rs.num_positive_roots() == POSITIVE_ROOT_COUNTS[(family, rank)]
    # every positive root is a nonnegative integer combination of simples
    for fw, rc in rs._root_coords.items():
        assert all(isinstance(x, int) and x >= 0 for x in rc)


@pytest.mark.parametrize("bad", ["D3", "E5", "H4", "A0", "G3", "F5", "A9"])
def test_invalid_types_rejected(bad):
    with pytest.raises(CartanError):
        parse_root_system(bad)


def test_weyl_enumeration_counts():
    for (family, rank), order in WEYL_ORDERS.items():
        els = weyl_enumerate(build_root_system(family, rank))
        assert len(els) == order


def test_weyl_enumeration_closure_and_lengths():
    rs = build_root_system("C", 2)
    W = weyl_group(rs)
    mats = {w.matrix for w in W}
    for w in W:
        assert inversion_count(w) == w.length
        for i in range(1, 3):
            assert w.times_simple(i).matrix in mats
    assert W.identity in W.elements
    assert W.longest.length == rs.num_positive_roots()
    assert W.longest * W.longest == W.identity


def test_a1_group():
    W = weyl_group(build_root_system("A", 1))
    assert [w.label() for w in W.elements] == ["e", "s1"]


def _brute_min_rep(W, w, dp):
    """Oracle: enumerate the subgroup W_P and scan the whole coset."""
    gens = [W.simple[i - 1] for i in sorted(dp)]
    subgroup = {W.identity}
    frontier = [W.identity]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = u * g
                if v not in subgroup:
                    subgroup.add(v)
                    nxt.append(v)
        frontier = nxt
    coset = [w * u for u in subgroup]
    best = min(coset, key=lambda u: (u.length, u.word))
    assert sum(1 for u in coset if u.length == best.length) == 1
    return best


def test_min_coset_rep_against_brute_force():
    rs = build_root_system("A", 2)
    W = weyl_group(rs)
    for dp in [{1}, {2}, {1, 2}, set()]:
        for w in W:
            assert min_coset_rep(w, dp) == _brute_min_rep(W, w, dp)
    rs = build_root_system("C", 2)
    W = weyl_group(rs)
    for dp in [{1}, {2}]:
        for w in W:
            assert min_coset_rep(w, dp) == _brute_min_rep(W, w, dp)


def test_min_coset_rep_trivial_cases():
    W = weyl_group(build_root_system("A", 2))
    s1, s2 = W.simple
    assert min_coset_rep(W.identity, {1}) == W.identity
    assert min_coset_rep(s1, {1}) == W.identity
    # the coset (s2 s1) W_{1} = {s2 s1, s2}; the brute-force scan gives s2
    assert min_coset_rep(s2 * s1, {1}) == _brute_min_rep(W, s2 * s1, {1}) == s2
    # mod W_{2} it is already minimal
    assert min_coset_rep(s2 * s1, {2}) == s2 * s1


def _subword_elements(W, word):
    """All group elements expressible as subwords of the given word."""
    reach = {(): {W.identity}}
    elems = {W.identity}
    current = {W.identity}
    for letter in word:
        nxt = set(current)
        for u in current:
            nxt.add(u.times_simple(letter))
        current = nxt
        elems |= current
    return current


def test_bruhat_subword_property_exhaustive():
    for family, rank in [("A", 2), ("C", 2)]:
        W = weyl_group(build_root_system(family, rank))
        for v in W:
            reachable = _subword_elements(W, v.word)
            below = {u for u in reachable if u.length <= v.length}
            for u in W:
                # subword property: u <= v iff u arises as a subword of any
                # fixed reduced word of v
                assert bruhat_leq(u, v) == (u in below), (u.label(), v.label())


def test_bruhat_trivial_examples():
    W = weyl_group(build_root_system("A", 2))
    s1, s2 = W.simple
    for v in W:
        assert bruhat_leq(W.identity, v)
    assert bruhat_leq(s1, s1 * s2)
    assert not bruhat_leq(s1, s2)


def test_flag_variety_reps_and_dimension():
    rs = build_root_system("A", 3)
    X = flag_variety(rs, (1, 3))
    assert len(X.coset_reps) == 6
    assert X.dimension == 4
    W = weyl_group(rs)
    assert len(X.coset_reps) * (len(W) // len(X.coset_reps)) == len(W)
    for w in X.coset_reps:
        for i in (1, 3):
            assert rs.is_positive_root(w.apply(rs.simple_roots[i - 1]))
    lengths = [w.length for w in X.coset_reps]
    assert lengths == sorted(lengths)


def test_coset_counting_all_parabolics():
    rs = build_root_system("C", 2)
    W = weyl_group(rs)
    import itertools
    for bits in itertools.product((0, 1), repeat=2):
        dp = {i + 1 for i in range(2) if bits[i]}
        reps = [w for w in W if min_coset_rep(w, dp) == w]
        order_wp = len(W) // len(reps)
        assert len(reps) * order_wp == len(W)


def test_parse_helpers():
    rs = parse_root_system("A3")
    assert (rs.family, rs.rank) == ("A", 3)
    assert parse_parabolic("1,3", 3) == {1, 3}
    assert parse_parabolic("", 3) == frozenset()
    with pytest.raises(CartanError):
        parse_parabolic("0,4", 3)
    with pytest.raises(CartanError):
        parse_root_system("AX")


def test_weyl_order_guard():
    rs = build_root_system("E", 7)
    with pytest.raises(CartanError):
        weyl_group(rs)
