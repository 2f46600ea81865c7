import pytest

from hyperent.classify import classes_for_format, classify, entanglement_class, representative
from hyperent.orbit_order import (
    WITNESSES,
    can_degrade,
    class_dag,
    degradation_targets,
    edge_classes,
    find_witness,
    order_diagram,
    to_dot,
    witness,
)
from hyperent.tensor import FormatError, apply_local


def test_three_qubit_order():
    edges = order_diagram((2, 2, 2))
    assert len(edges) == 9
    assert ("GHZ", "W") not in edges and ("W", "GHZ") not in edges
    ghz = entanglement_class((2, 2, 2), "GHZ")
    w = entanglement_class((2, 2, 2), "W")
    assert not can_degrade(ghz, w)
    assert not can_degrade(w, ghz)
    assert can_degrade(ghz, ghz)
    assert [c.name for c in degradation_targets(w)] == ["W", "B1", "B2", "B3", "SEP"]


def test_qutrit_order():
    gen = entanglement_class((3, 2, 2), "GEN322")
    deg = entanglement_class((3, 2, 2), "DEG322")
    assert not can_degrade(gen, deg)
    assert not can_degrade(deg, gen)
    assert len(order_diagram((3, 2, 2))) == 13
    assert all(e.derived for e in class_dag((3, 2, 2)).edges if e.source in ("GHZ", "W", "B1", "B2", "B3"))


def test_dag_edges_decrease_dimension():
    for dims in [(2, 2, 2), (3, 2, 2), (2, 2, 2, 2), (3, 4)]:
        for e in class_dag(dims).edges:
            src, tgt = edge_classes(dims, e)
            assert src.dimension > tgt.dimension


@pytest.mark.parametrize("key", sorted(WITNESSES))
def test_fixture_witnesses(key):
    dims, src, tgt = key
    op = WITNESSES[key]
    assert not op.is_invertible()
    out = apply_local(representative(entanglement_class(dims, src)), op)
    assert classify(out).name == tgt


def test_witness_search_four_qubits():
    dag = class_dag((2, 2, 2, 2))
    for e in dag.edges:
        src, tgt = edge_classes((2, 2, 2, 2), e)
        op = witness(src, tgt)
        assert op is not None
        assert classify(apply_local(representative(src), op)) == tgt


def test_find_witness_fails_upward():
    sep = entanglement_class((2, 2, 2), "SEP")
    ghz = entanglement_class((2, 2, 2), "GHZ")
    assert find_witness(sep, ghz) is None


def test_bipartite_chain():
    assert order_diagram((3, 3)) == [("S3", "S2"), ("S2", "S1")]
    s3 = entanglement_class((3, 3), "S3")
    assert len(degradation_targets(s3)) == 3


def test_dot_and_errors():
    dot = to_dot((3, 2, 2))
    assert dot.startswith('digraph "3x2x2"')
    assert '"GHZ" -> "B1" [style=dashed];' in dot
    assert '"GEN322" -> "GHZ";' in dot
    with pytest.raises(FormatError):
        can_degrade(entanglement_class((2, 2, 2), "GHZ"), entanglement_class((3, 2, 2), "GHZ"))
    assert len(classes_for_format((2, 2, 2, 2))) == len(class_dag((2, 2, 2, 2)).nodes)


def test_two_pair_patterns_not_reachable_from_genuine_four_qubit():
    gen = entanglement_class((2, 2, 2, 2), "GEN4")
    pair = entanglement_class((2, 2, 2, 2), "B12-34")
    assert not can_degrade(gen, pair)
    assert can_degrade(gen, entanglement_class((2, 2, 2, 2), "B1-2-34"))
    assert find_witness(gen, pair) is None
