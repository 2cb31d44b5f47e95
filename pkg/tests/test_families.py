import pytest

from eigenmult import graphs as G
from eigenmult.algebraic import default_lambda_set, multiplicity
from eigenmult.families import (
    FamilyError,
    FamilySpec,
    attach_broom,
    attach_tadpole,
    broom,
    broom_deletions,
    build_branched_family,
    build_family,
    cycle_deletions,
    cycle_graph,
    double_spider,
    figure_eight,
    find_labeled,
    parse_family_spec,
    path_graph,
    spider,
    starlike,
    tadpole,
    theta_graph,
)
from eigenmult.polynomials import in_path_spectrum


def test_path_cycle():
    assert path_graph(1).n == 1
    assert G.is_cycle_graph(cycle_graph(3))
    with pytest.raises(FamilyError):
        cycle_graph(2)
    with pytest.raises(FamilyError):
        path_graph(0)


def test_starlike():
    sp = starlike(3, 2)
    assert sp.n == 7 and find_labeled(sp, "center") == [0]
    assert G.are_isomorphic(starlike(2, 3), path_graph(7))
    assert G.are_isomorphic(starlike(1, 4), path_graph(5))
    for k, s in [(1, 1), (2, 2), (3, 4), (4, 3)]:
        assert starlike(k, s).n == k * s + 1
    # two legs make the shortest bare path still inside G_s; one leg does not
    for s in (1, 2, 3):
        assert G.is_in_Gs(starlike(2, s), s)
        assert not G.is_in_Gs(starlike(1, s), s)
        for k in (3, 4):
            assert G.is_in_Gs(starlike(k, s), s)


def test_broom():
    assert G.are_isomorphic(broom(2, 2, 1), path_graph(5))
    b = broom(2, 3, 2)
    assert b.n == 8 and len(find_labeled(b, "tail")) == 1
    scattered = broom(3, 2, 0)
    assert scattered.n == 6 and len(G.connected_components(scattered)) == 3
    for k, s, l in [(1, 2, 3), (2, 3, 1), (4, 2, 6)]:
        assert broom(k, s, l).n == s * k + l


def test_double_spider():
    ds = double_spider(2, 2, 2, 2)
    assert ds.n == 10 and len(find_labeled(ds, "center")) == 2
    assert double_spider(3, 3, 2, 3).n == 15
    assert G.are_isomorphic(double_spider(1, 1, 2, 4), path_graph(8))
    with pytest.raises(FamilyError):
        double_spider(2, 2, 2, 1)


def test_tadpole():
    t = tadpole(5, 3)
    assert t.n == 7 and G.q_s_count(t, 2) == 1
    assert G.are_isomorphic(tadpole(6, 1), cycle_graph(6))
    assert sorted(tadpole(3, 2).degrees()) == [1, 2, 2, 3]
    with pytest.raises(FamilyError):
        tadpole(2, 1)


def test_figure_eight_and_theta():
    b44 = figure_eight(4, 4)
    assert b44.n == 7 and G.cyclomatic_number(b44) == 2
    bow = figure_eight(3, 3)
    assert bow.n == 5 and sorted(bow.degrees()) == [2, 2, 2, 2, 4]
    th = theta_graph(2, 2, 2)
    assert th.n == 5 and G.cyclomatic_number(th) == 2
    k23 = G.from_edge_list(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert G.are_isomorphic(th, k23)
    theta_graph(1, 2, 2)  # one unit arm is fine
    with pytest.raises(FamilyError):
        theta_graph(1, 1, 2)


def test_attach_ops():
    g = attach_broom(cycle_graph(5), 0, 1, 1, 3)
    assert g.n == 8  # legs planted straight on the cycle vertex
    g = attach_broom(cycle_graph(6), 0, 3, 2, 2)
    assert g.n == 6 + 2 + 4
    assert G.cyclomatic_number(g) == 1
    t = attach_tadpole(cycle_graph(6), 0, 3, 5)
    assert t.n == 6 + 2 + 4 and G.cyclomatic_number(t) == 2
    with pytest.raises(FamilyError):
        attach_broom(path_graph(2), 0, 1, 1, 2)
    with pytest.raises(FamilyError):
        attach_tadpole(path_graph(3), 0, 1, 4)  # endpoint has degree 1
    with pytest.raises(G.GraphError):
        attach_broom(cycle_graph(4), 9, 1, 1, 2)


def test_attach_members_lie_in_Gs():
    for s in (2, 3):
        for l in (1, 2, 4):
            for k in (1, 2):
                g = attach_broom(cycle_graph(5), 0, l, k, s)
                assert G.is_in_Gs(g, s)


def test_roundtrip_broom():
    for (k, s, l) in [(1, 3, 1), (2, 2, 3), (3, 2, 1), (1, 2, 4)]:
        g = attach_broom(cycle_graph(6), 0, l, k, s)
        dels = broom_deletions(g, s)
        hits = [
            (h, d)
            for h, d in dels
            if d["k"] == k and d["l"] == l and G.are_isomorphic(h, cycle_graph(6))
        ]
        assert hits, (k, s, l, [d for _, d in dels])


def test_roundtrip_tadpole():
    for (g_len, l) in [(5, 1), (4, 3), (6, 2)]:
        host = cycle_graph(6)
        g = attach_tadpole(host, 0, l, g_len)
        dels = cycle_deletions(g)
        hits = [
            (h, d)
            for h, d in dels
            if d["g"] == g_len and d["l"] == l and G.are_isomorphic(h, host)
        ]
        assert hits, (g_len, l, [d for _, d in dels])


def test_deletions_edge_cases():
    assert cycle_deletions(cycle_graph(7)) == []
    assert broom_deletions(cycle_graph(7), 2) == []
    assert cycle_deletions(tadpole(5, 3)) == []  # nothing would remain
    dumb = attach_tadpole(cycle_graph(4), 0, 3, 5)
    descs = sorted(d["g"] for _, d in cycle_deletions(dumb))
    assert descs == [4, 5]
    star_legs = attach_broom(cycle_graph(5), 0, 1, 3, 2)
    ks = sorted(d["k"] for _, d in broom_deletions(star_legs, 2))
    assert ks == [1, 2, 3]  # removing 1, 2 or all 3 of the planted legs


def test_lemma_broom_multiplicity_grid(lambdas_q8):
    # brooms carry any admissible eigenvalue at most once, and a tail
    # shrink by one drops it (k <= 4, l <= 6, s <= 4)
    for s in (2, 3, 4):
        for k in range(1, 5):
            for l in range(1, 7):
                g = broom(k, s, l)
                for lam in lambdas_q8:
                    if in_path_spectrum(lam, s):
                        continue
                    m = multiplicity(g, lam)
                    assert m <= 1, (k, s, l, lam.name)
                    if m == 1 and l >= 2:
                        assert multiplicity(broom(k, s, l - 1), lam) == 0


def test_lemma_two_bound_on_cycle_shapes(lambdas_q8):
    # cycle + path + starlike and tadpoles never exceed multiplicity 2
    for s in (2, 3):
        for g_len in (3, 5, 6):
            for l in (1, 2, 3):
                for k in (1, 2):
                    comp = attach_broom(cycle_graph(g_len), 0, l, k, s)
                    for lam in lambdas_q8:
                        if in_path_spectrum(lam, s):
                            continue
                        assert multiplicity(comp, lam) <= 2
    for g_len in (4, 5, 6):
        for l in (1, 2, 4):
            t = tadpole(g_len, l)
            for s in (2, 3):
                for lam in lambdas_q8:
                    if in_path_spectrum(lam, s):
                        continue
                    assert multiplicity(t, lam) <= 2


def test_build_branched_family():
    t25 = build_branched_family(spider([2, 2, 2]), [("T", 2, 2)] * 3, 3)
    assert t25.n == 25 and G.is_tree(t25) and G.q_s_count(t25, 3) == 3
    g26 = build_branched_family(
        spider([2, 2, 2]), [("T", 2, 2), ("T", 2, 2), ("C", 6, 4)], 3
    )
    assert g26.n == 26
    assert G.cyclomatic_number(g26) == 1 and G.q_s_count(g26, 3) == 2
    assert G.is_in_Gs(g26, 3)
    with pytest.raises(FamilyError):
        build_branched_family(spider([1, 1, 1]), [("T", 2, 2)] * 3, 3)
    with pytest.raises(FamilyError):
        build_branched_family(spider([2, 2, 2]), [("T", 2, 2)] * 2, 3)
    with pytest.raises(FamilyError):
        build_branched_family(cycle_graph(5), [("T", 2, 2)] * 3, 3)
    with pytest.raises(FamilyError):
        build_branched_family(path_graph(7), [("T", 2, 2)] * 2, 3)
    # adjacent high-degree skeleton vertices rejected
    double_star = G.from_edge_list(
        8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7)]
    )
    with pytest.raises(FamilyError):
        build_branched_family(double_star, [("T", 1, 1)] * 5, 2)


def test_family_specs_roundtrip():
    texts = [
        "P(5)",
        "C(6)",
        "S(2,2,2)",
        "Tk(k=3,s=2)",
        "Tkl(k=2,s=3,l=2)",
        "Tkkl(k1=2,k2=2,s=3,l=2)",
        "Ckl(g=6,l=4)",
        "B(l=4,k=4)",
        "Theta(a=2,b=2,c=2)",
        "BTh(T0=S(2,2,2);T(2,2),T(2,2),C(6,4);s=3)",
    ]
    for txt in texts:
        spec = parse_family_spec(txt)
        g = build_family(spec)
        assert g.n >= 1
        assert parse_family_spec(spec.to_text()) == spec


def test_family_spec_errors():
    for bad in ["", "Zzz(1)", "Tk(k=3)", "Tk(k=3,s=2,l=1)", "P()", "BTh(T0=P(3);s=2)"]:
        with pytest.raises(FamilyError):
            parse_family_spec(bad)


def test_spec_examples_build_expected_graphs():
    assert G.are_isomorphic(build_family(parse_family_spec("Tk(k=2,s=3)")), path_graph(7))
    c64 = build_family(parse_family_spec("Ckl(g=6,l=4)"))
    assert c64.n == 9
    bth = build_family(
        parse_family_spec("BTh(T0=S(2,2,2);T(2,2),T(2,2),C(6,4);s=3)")
    )
    assert bth.n == 26
