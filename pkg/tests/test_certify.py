import json

import numpy as np
import pytest

from specchrom import (
    BoundUndefinedError,
    BudgetExceededError,
    NotEdgeTransitiveError,
    SizeLimitError,
    certificate_to_dict,
    enumerate_nonisomorphic,
    find_homomorphism,
    obstruction_certificate,
    run_all_lemma_verifiers,
    verify_certificate_dict,
    verify_general_Z_inequality,
    verify_lemma_conformal,
    verify_lemma_main,
    verify_scheme_span_inequality,
)
from specchrom.bounds import hoffman_bound
from specchrom.certify import LEMMA_IDS, _hoffman_ratio
from specchrom.generators import (
    complete_graph,
    cycle_graph,
    kneser_graph,
    petersen_graph,
    resolve_graph_spec,
)
from specchrom.graphs import Graph, is_bipartite, is_connected
from specchrom.partitions import identity_partition, partition_from_sizes
from specchrom.spectra import eigendecompose, squared_energies

import oracles


def check_mapping(g, h, phi):
    assert len(phi) == g.n
    for u, v in g.edges():
        assert h.adjacency[phi[u], phi[v]] == 1


# -- homomorphism search --------------------------------------------------


def test_homomorphism_triangle_into_odd_prism():
    prism = resolve_graph_spec("complement:cycle:6")
    phi = find_homomorphism(complete_graph(3), prism)
    check_mapping(complete_graph(3), prism, phi)


def test_homomorphism_c5_into_k3():
    phi = find_homomorphism(cycle_graph(5), complete_graph(3))
    check_mapping(cycle_graph(5), complete_graph(3), phi)


def test_no_homomorphism_petersen_to_c7():
    assert find_homomorphism(petersen_graph(), cycle_graph(7)) is None


def test_no_homomorphism_k4_to_c5():
    assert find_homomorphism(complete_graph(4), cycle_graph(5)) is None


def test_homomorphism_budget():
    with pytest.raises(BudgetExceededError):
        find_homomorphism(petersen_graph(), cycle_graph(7), node_budget=5)


def test_homomorphism_size_cap():
    big = cycle_graph(16)
    with pytest.raises(SizeLimitError):
        find_homomorphism(big, complete_graph(3))
    with pytest.raises(SizeLimitError):
        find_homomorphism(complete_graph(3), big)


def test_homomorphism_matches_brute_force():
    gs = [g for g in enumerate_nonisomorphic(4) if g.m > 0]
    hs = [h for h in enumerate_nonisomorphic(4) if h.m > 0]
    for g in gs:
        for h in hs:
            found = find_homomorphism(g, h)
            exists = oracles.homomorphism_exists(g, h)
            if found is None:
                assert not exists
            else:
                assert exists
                check_mapping(g, h, found)


def test_homomorphism_into_edgeless_target():
    g = complete_graph(2)
    h = Graph(np.zeros((3, 3)))
    assert find_homomorphism(g, h) is None


# -- obstruction certificates ---------------------------------------------


def test_certificate_petersen_c7():
    cert = obstruction_certificate(
        petersen_graph(), cycle_graph(7), "petersen", "cycle:7"
    )
    assert cert.s_plus == pytest.approx(14.0, abs=1e-10)
    assert cert.s_minus == pytest.approx(16.0, abs=1e-10)
    assert cert.ratio_G == pytest.approx(8 / 7, abs=1e-10)
    assert cert.ratio_H == pytest.approx(1.1099162, abs=1e-6)
    assert cert.margin > 0
    assert cert.edge_transitivity_witness == 1
    assert cert.certified


def test_certificate_margin_matches_ratios():
    cert = obstruction_certificate(
        complete_graph(4), cycle_graph(5), "complete:4", "cycle:5"
    )
    assert cert.margin == pytest.approx(cert.ratio_G - cert.ratio_H, abs=1e-12)
    assert cert.certified  # 3/2 > 1 + 2/phi - 1


def test_certificate_self_map_inconclusive():
    cert = obstruction_certificate(
        complete_graph(3), complete_graph(3), "complete:3", "complete:3"
    )
    assert cert.margin == pytest.approx(0.0, abs=1e-10)
    assert not cert.certified


def test_certificate_requires_edge_transitive_target():
    with pytest.raises(NotEdgeTransitiveError):
        obstruction_certificate(
            complete_graph(3),
            resolve_graph_spec("wheel:5"),
            "complete:3",
            "wheel:5",
        )


def test_certificate_rejects_edgeless_source():
    with pytest.raises(BoundUndefinedError):
        obstruction_certificate(
            Graph(np.zeros((3, 3))), complete_graph(3), "empty", "complete:3"
        )


def test_certificate_dict_round_trip():
    cert = obstruction_certificate(
        petersen_graph(), cycle_graph(7), "petersen", "cycle:7"
    )
    data = json.loads(json.dumps(certificate_to_dict(cert)))
    ok, messages = verify_certificate_dict(data, resolve_graph_spec)
    assert ok
    assert any("no homomorphism" in m for m in messages)


def test_certificate_tampering_detected():
    cert = obstruction_certificate(
        petersen_graph(), cycle_graph(7), "petersen", "cycle:7"
    )
    data = certificate_to_dict(cert)
    data["ratio_H"] = data["ratio_G"] + 1.0
    ok, problems = verify_certificate_dict(data, resolve_graph_spec)
    assert not ok
    assert any("ratio_H" in p for p in problems)


def test_certificate_wrong_source_detected():
    cert = obstruction_certificate(
        petersen_graph(), cycle_graph(7), "petersen", "cycle:7"
    )
    data = certificate_to_dict(cert)
    data["source"] = "kneser:6:2"
    ok, problems = verify_certificate_dict(data, resolve_graph_spec)
    assert not ok


def test_certified_obstruction_is_sound_small():
    # wherever the certificate fires, exhaustive search must agree
    targets = [cycle_graph(5), cycle_graph(7), complete_graph(3)]
    for g in enumerate_nonisomorphic(5, connected_only=True):
        if g.m == 0:
            continue
        for h in targets:
            try:
                cert = obstruction_certificate(g, h, "g", "h")
            except BoundUndefinedError:
                continue
            if cert.certified:
                assert find_homomorphism(g, h) is None


def test_ratio_monotone_under_homomorphism():
    # if G -> H exists between edge-transitive vertex-transitive targets,
    # the squared-energy ratio of G cannot exceed the eigenvalue ratio of H
    targets = ["cycle:5", "cycle:7", "complete:3", "complete:4", "complete:5"]
    sources = [
        g
        for g in enumerate_nonisomorphic(5, connected_only=True)
        if g.m > 0 and not is_bipartite(g).bipartite
    ]
    for name in targets:
        h = resolve_graph_spec(name)
        ratio_h = _hoffman_ratio(h)
        assert ratio_h == pytest.approx(hoffman_bound(h) - 1.0, abs=1e-12)
        for g in sources:
            if find_homomorphism(g, h) is None:
                continue
            spectrum = eigendecompose(np.asarray(g.adjacency, dtype=float))
            sp, sm = squared_energies(spectrum)
            ratio_g = max(sp / sm, sm / sp) if min(sp, sm) > 0 else np.inf
            assert ratio_g <= ratio_h + 1e-8


def test_bipartite_sources_always_admit_k2_map():
    # bipartite graphs have s+ = s- exactly, so the ratio is 1 and no
    # target with an edge can ever be obstructed
    for g in enumerate_nonisomorphic(5, connected_only=True):
        if g.m == 0 or not is_bipartite(g).bipartite:
            continue
        spectrum = eigendecompose(np.asarray(g.adjacency, dtype=float))
        sp, sm = squared_energies(spectrum)
        assert sp == pytest.approx(sm, abs=1e-8)
        cert = obstruction_certificate(g, complete_graph(2), "g", "complete:2")
        assert not cert.certified
        assert find_homomorphism(g, complete_graph(2)) is not None


# -- lemma verifiers ------------------------------------------------------


def test_lemma_main_on_cycle():
    report = verify_lemma_main(
        cycle_graph(5), (2, 2, 1, 1, 1), trials=50, seed=7
    )
    assert report.lemma_id == "main"
    assert report.trials == 50
    assert report.passed
    assert report.max_violation <= report.tolerance * report.scale


def test_lemma_main_seed_reproducible():
    sizes = (3, 2, 2, 1, 1, 1, 1)
    a = verify_lemma_main(cycle_graph(7), sizes, trials=25, seed=11)
    b = verify_lemma_main(cycle_graph(7), sizes, trials=25, seed=11)
    c = verify_lemma_main(cycle_graph(7), sizes, trials=25, seed=12)
    assert a.max_violation == b.max_violation
    assert a.claims == b.claims
    assert a.max_violation != c.max_violation


def test_lemma_main_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_lemma_main(cycle_graph(5), (2, 2, 1, 1, 1), trials=0, seed=1)
    with pytest.raises(ValueError):
        verify_lemma_main(cycle_graph(5), (2, 2, 2), trials=5, seed=1)
    with pytest.raises(ValueError):
        verify_lemma_main(cycle_graph(5), (2, 2, -1, 1, 1), trials=5, seed=1)


def test_lemma_conformal_on_petersen():
    sizes = (2, 1, 1, 1, 1, 1, 1, 1, 1, 2)
    partition = partition_from_sizes(petersen_graph(), sizes)
    report = verify_lemma_conformal(
        petersen_graph(), partition, trials=40, seed=3
    )
    assert report.passed
    assert "max_xy_residual" in report.claims


def test_lemma_conformal_partition_target_must_match():
    partition = identity_partition(cycle_graph(5))
    with pytest.raises(ValueError):
        verify_lemma_conformal(cycle_graph(7), partition, trials=5, seed=1)


def test_scheme_span_on_kneser():
    report = verify_scheme_span_inequality(kneser_graph(5, 2), trials=30, seed=5)
    assert report.passed
    assert 0 < report.claims["acceptance_rate"] <= 1.0


def test_general_z_on_complete():
    report = verify_general_Z_inequality(complete_graph(4), trials=60, seed=9)
    assert report.passed
    # drift claims are already scale-normalized per trial
    assert report.claims["max_sum_drift"] <= 1e-9
    assert report.claims["max_offedge_drift"] <= 1e-9
    assert report.claims["max_span_residual"] <= 1e-9


def test_verifiers_need_transitive_targets():
    prism = resolve_graph_spec("complement:cycle:6")  # vt but not et
    with pytest.raises(NotEdgeTransitiveError):
        verify_scheme_span_inequality(prism, trials=5, seed=1)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])  # et but not vt
    with pytest.raises(ValueError):
        verify_general_Z_inequality(star, trials=5, seed=1)
    with pytest.raises(ValueError):
        verify_lemma_main(
            Graph(np.zeros((3, 3))), (1, 1, 1), trials=5, seed=1
        )


def test_run_all_covers_every_lemma():
    reports = run_all_lemma_verifiers(cycle_graph(5), trials=20, seed=2)
    assert [r.lemma_id for r in reports] == list(LEMMA_IDS)
    assert all(r.passed for r in reports)


def test_report_dict_shape():
    report = verify_lemma_main(
        cycle_graph(5), (2, 2, 1, 1, 1), trials=10, seed=4
    )
    d = report.to_dict()
    assert d["lemma_id"] == "main"
    assert d["trials"] == 10
    assert d["passed"] is True
    assert d["seed_rule"] == "default_rng([seed, trial_index])"
    assert isinstance(d["claims"], dict)


def test_worst_trial_recorded_even_when_all_hold():
    # violations are signed; with everything holding strictly the worst
    # trial still lands at a finite negative margin, never a placeholder
    report = verify_lemma_main(
        cycle_graph(5), (2, 2, 1, 1, 1), trials=30, seed=8
    )
    assert report.max_violation < 0
    assert report.scale >= 1.0
