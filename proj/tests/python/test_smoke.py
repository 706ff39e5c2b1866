import pytest

import ied_color as ic


def two_triples():
    return ic.Hypergraph(4, [[1, 2, 3], [2, 3, 4]])


def test_structure_queries():
    h = two_triples()
    assert h.n == 4
    assert h.m == 2
    assert ic.uniformity(h) == 3
    assert ic.difference_spectrum(h) == [1]
    assert h.max_degree() == 2


def test_verifiers():
    h = two_triples()
    assert ic.verify(h, [0, 1, 2, 0], "sets") == (1, 2)
    assert ic.verify(h, [0, 1, 2, 3], "sets") is None
    assert ic.verify(h, [0, 0, 1, 1], "multisets") is None
    assert ic.verify_partial(h, [0, None, None, 0], "sets") == (1, 2)


def test_bounds_and_combinatorics():
    assert ic.fubini(3) == 13
    assert ic.fubini(12) == 28091567595
    assert ic.stirling2(3, 2) == 3
    assert ic.q(2) == pytest.approx(2.0)
    assert ic.bound_sequences(10, 2, [9], 1) == 2
    assert ic.bound_ieds(3, 2, [2]) == 16
    with pytest.raises(ic.IedError):
        ic.fubini(65)


def test_run_verify_decode_round_trip():
    g = ic.Graph(8, [(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 7),
                     (4, 8), (5, 6), (5, 7), (6, 8), (7, 8)])
    dual = ic.dual_hypergraph(g)
    r = ic.bound_ieds(3, 2, [2])
    lists = [list(range(1, r + 1)) for _ in range(dual.n)]
    result = ic.run(dual, lists, "sets", seed=7, r=r)
    assert result["complete"]
    coloring = result["coloring"]
    assert ic.verify(dual, coloring, "sets") is None
    decoded = ic.decode(dual, lists, "sets", r, result["log"], coloring)
    assert decoded == result["draws"]


def test_sequences():
    h = ic.Hypergraph(5, [[1, 2, 3], [1, 4, 5]])
    pi = ic.PermutationFamily.identity(3)
    assert ic.verify_sequences(h, pi, [0, 1, 2, 1, 2]) == (1, 2, 1)
    assert ic.verify_sequences(h, pi, [0, 1, 2, 2, 1]) is None


def test_gndi_and_property_b():
    fano = ic.fano_plane()
    assert ic.property_b(fano) is None
    value, labeling = ic.gndi(ic.fano_incidence())
    assert value == 3 and labeling is None
    c4 = ic.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    value, labeling = ic.gndi(c4)
    assert value == 2
    assert sorted(set(labeling)) == [1, 2]
    assert ic.brute_force_gndi(ic.Graph(4, [(1, 2), (2, 3), (3, 4)])) == 3


def test_gadget():
    phi = ic.NaeFormula(2, [[1, 2]])
    gadget = ic.hardness_gadget(phi, 4)
    assert gadget.n == 11
    assert gadget.m == 10
    value, _ = ic.gndi(gadget)
    assert value == 2
    assert ic.nae_satisfiable(phi) is not None
    assert ic.nae_satisfiable(phi, forced_true=[1, 2]) is None


def test_oracle():
    h = two_triples()
    lists = [[1, 2, 3]] * 4
    witness = ic.brute_force_coloring(h, lists, "sets")
    assert witness == [1, 1, 1, 2]
    assert ic.verify(h, witness, "sets") is None
