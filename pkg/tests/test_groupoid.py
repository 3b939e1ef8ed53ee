import json
from itertools import product as iproduct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whkit.groupoid import (
    GroupoidError,
    cyclic_group,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    parse_groupoid,
    product,
    trivial_groupoid,
)


def brute_force_ok(G):
    """Independent axiom check straight from the tables."""
    A = G.arrows
    for p, q in iproduct(A, A):
        defined = (p, q) in G.comp
        if defined != (G.src[p] == G.tgt[q]):
            return False
    for p, q, r in iproduct(A, A, A):
        if (p, q) in G.comp and (q, r) in G.comp:
            if G.comp[(G.comp[(p, q)], r)] != G.comp[(p, G.comp[(q, r)])]:
                return False
    for p in A:
        i = G.inv[p]
        if G.comp[(p, i)] != G.unit_arrow[G.tgt[p]] or G.comp[(i, p)] != G.unit_arrow[G.src[p]]:
            return False
    return True


def test_z2_from_file():
    text = json.dumps({
        "units": ["e"],
        "arrows": [{"id": "e", "src": "e", "tgt": "e"}, {"id": "g", "src": "e", "tgt": "e"}],
        "comp": [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"], ["g", "g", "e"]],
        "inv": {"e": "e", "g": "g"},
    })
    G = parse_groupoid(text)
    assert len(G.units) == 1 and len(G.arrows) == 2
    assert G.compose("g", "g") == "e"
    assert G.unit_arrow["e"] == "e"


def test_pair2_from_file_with_inferred_identities():
    arrows = [{"id": "(1,2)", "src": "2", "tgt": "1"}, {"id": "(2,1)", "src": "1", "tgt": "2"}]
    comp = [["(1,2)", "(2,1)", "id:1"], ["(2,1)", "(1,2)", "id:2"]]
    G = parse_groupoid(json.dumps({"units": ["1", "2"], "arrows": arrows, "comp": comp,
                                   "inv": {"(1,2)": "(2,1)", "(2,1)": "(1,2)"}}))
    assert len(G.units) == 2 and len(G.arrows) == 4
    assert brute_force_ok(G)


def test_bad_composition_rejected():
    G = pair_groupoid(2).to_json()
    G["comp"].append(["(1,2)", "(1,2)", "(1,1)"])
    with pytest.raises(GroupoidError, match="src"):
        parse_groupoid(json.dumps(G))


def test_nonassociative_table_rejected():
    with pytest.raises(GroupoidError):
        group_groupoid([[0, 1, 2], [1, 0, 0], [2, 0, 1]])


def test_malformed_files():
    for text in ["[]", "{", json.dumps({"arrows": []})]:
        with pytest.raises(GroupoidError):
            parse_groupoid(text)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_groupoid_counts(n):
    G = pair_groupoid(n)
    assert len(G.arrows) == n * n and len(G.units) == n
    assert brute_force_ok(G)


def test_pair3_composable_counts():
    G = pair_groupoid(3)
    pairs = list(G.composable_pairs())
    assert len(pairs) == 27
    triples = [(p, q, r) for p, q, r in iproduct(G.arrows, repeat=3)
               if G.compose(p, q) is not None and G.compose(q, r) is not None]
    assert len(triples) == 81
    assert all(G.compose(G.compose(p, q), r) == G.compose(p, G.compose(q, r)) for p, q, r in triples)


def test_generators():
    assert len(trivial_groupoid().arrows) == 1
    z2 = cyclic_group(2)
    assert (len(z2.units), len(z2.arrows)) == (1, 2)
    U = disjoint_union(z2, trivial_groupoid())
    assert (len(U.units), len(U.arrows)) == (2, 3)
    P = product(pair_groupoid(2), z2)
    assert (len(P.units), len(P.arrows)) == (2, 8)
    assert brute_force_ok(U) and brute_force_ok(P)


def test_json_round_trip(gname):
    from whkit.groupoid import corpus
    G = corpus()[gname]
    H = parse_groupoid(json.dumps(G.to_json()))
    assert H.arrows == G.arrows and dict(H.comp) == dict(G.comp)


small = st.one_of(
    st.integers(1, 3).map(pair_groupoid),
    st.integers(1, 4).map(cyclic_group),
)


@settings(max_examples=25, deadline=None)
@given(small, small, st.booleans())
def test_constructions_are_groupoids(G1, G2, use_product):
    G = product(G1, G2) if use_product else disjoint_union(G1, G2)
    assert brute_force_ok(G)
    n1, n2 = len(G1.arrows), len(G2.arrows)
    assert len(G.arrows) == (n1 * n2 if use_product else n1 + n2)
