from fractions import Fraction

import numpy as np
import pytest

from specchrom import (
    SizeLimitError,
    enumerate_nonisomorphic,
    fractional_chromatic,
    kneser_ratio,
    maximal_independent_sets,
)
from specchrom.fracchrom import solution_to_dict
from specchrom.generators import (
    complete_graph,
    cycle_graph,
    kneser_graph,
    petersen_graph,
    resolve_graph_spec,
)
from specchrom.graphs import Graph
from specchrom.spectra import eigendecompose

import oracles


# -- maximal independent sets ----------------------------------------------


def test_mis_matches_brute_force():
    for n in range(1, 7):
        for g in enumerate_nonisomorphic(n):
            assert maximal_independent_sets(g) == \
                oracles.maximal_independent_sets(g)


def test_mis_known_counts():
    assert len(maximal_independent_sets(petersen_graph())) == 15
    assert len(maximal_independent_sets(cycle_graph(7))) == 7
    # sets come back as sorted vertex bitmasks
    assert maximal_independent_sets(complete_graph(4)) == [1, 2, 4, 8]
    assert maximal_independent_sets(Graph(np.zeros((3, 3)))) == [0b111]


def test_mis_size_cap():
    with pytest.raises(SizeLimitError):
        maximal_independent_sets(Graph(np.zeros((31, 31))))


# -- fractional chromatic number -------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_chi_f_complete(n):
    assert fractional_chromatic(complete_graph(n)).value == Fraction(n)


@pytest.mark.parametrize("name,value", [
    ("cycle:5", Fraction(5, 2)),
    ("cycle:7", Fraction(7, 3)),
    ("cycle:9", Fraction(9, 4)),
    ("petersen", Fraction(5, 2)),
    ("kneser:6:2", Fraction(3)),
    ("wheel:5", Fraction(7, 2)),
    ("path:4", Fraction(2)),
])
def test_chi_f_known_values(name, value):
    assert fractional_chromatic(resolve_graph_spec(name)).value == value


def test_chi_f_disconnected_is_max_over_components():
    # C5 next to K4: chi_f = max(5/2, 4) = 4
    adjacency = np.zeros((9, 9), dtype=int)
    for i in range(5):
        j = (i + 1) % 5
        adjacency[i, j] = adjacency[j, i] = 1
    for i in range(5, 9):
        for j in range(i + 1, 9):
            adjacency[i, j] = adjacency[j, i] = 1
    assert fractional_chromatic(Graph(adjacency)).value == Fraction(4)


def test_chi_f_single_vertex():
    assert fractional_chromatic(Graph([[0]])).value == Fraction(1)


def test_chi_f_size_cap():
    with pytest.raises(SizeLimitError):
        fractional_chromatic(cycle_graph(19))


def test_chi_f_vertex_transitive_identity():
    # for vertex-transitive graphs chi_f = n / alpha
    for name in ["cycle:5", "cycle:7", "petersen", "kneser:5:2",
                 "complete:6", "paley:9", "complement:cycle:6"]:
        g = resolve_graph_spec(name)
        alpha = oracles.independence_number(g)
        assert fractional_chromatic(g).value == Fraction(g.n, alpha)


def test_chi_f_between_clique_and_chromatic():
    for g in enumerate_nonisomorphic(6, connected_only=True):
        value = fractional_chromatic(g).value
        assert value >= oracles.clique_number(g)
        assert value <= oracles.chromatic_number(g)


def test_weights_certify_value():
    solution = fractional_chromatic(petersen_graph())
    total = Fraction(0)
    for mask, weight in solution.weights.items():
        assert weight > 0
        total += weight
    assert total == solution.value == Fraction(5, 2)
    # every vertex covered to at least 1
    for v in range(10):
        cover = sum(
            w for mask, w in solution.weights.items() if mask >> v & 1
        )
        assert cover >= 1


def test_dual_certificate_packs():
    solution = fractional_chromatic(cycle_graph(7))
    dual = solution.dual_certificate
    assert sum(dual) == Fraction(7, 3)
    for mask in maximal_independent_sets(cycle_graph(7)):
        assert sum(dual[v] for v in range(7) if mask >> v & 1) <= 1


def test_solution_dict_shape():
    d = solution_to_dict(fractional_chromatic(cycle_graph(5)), 5)
    assert d["value"] == "5/2"
    assert d["value_float"] == pytest.approx(2.5)
    for entry in d["weights"]:
        assert set(entry) == {"set", "vertices", "weight"}
        mask = int(entry["set"], 16)
        assert [v for v in range(5) if mask >> v & 1] == entry["vertices"]
    assert d["dual_certificate"] == ["1/2"] * 5


# -- Kneser eigenvalue ratio -----------------------------------------------


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (7, 2), (7, 3), (9, 4),
                                 (4, 2), (6, 3)])
def test_kneser_ratio_closed_form(n, k):
    assert kneser_ratio(n, k) == Fraction(n, k) - 1


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (7, 3)])
def test_kneser_ratio_matches_spectrum(n, k):
    g = kneser_graph(n, k)
    eigenvalues = eigendecompose(
        np.asarray(g.adjacency, dtype=float)
    ).eigenvalues
    ratio = eigenvalues[0] / abs(eigenvalues[-1])
    assert float(kneser_ratio(n, k)) == pytest.approx(ratio, abs=1e-9)


def test_kneser_ratio_rejects_bad_parameters():
    with pytest.raises(ValueError):
        kneser_ratio(3, 2)
    with pytest.raises(ValueError):
        kneser_ratio(5, 0)
