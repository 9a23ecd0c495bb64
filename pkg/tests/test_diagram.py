import random

import pytest

from conftest import FIGURE_EIGHT, TREFOIL, random_gluing
from thompsonlinks.diagram import LinkDiagram, PDParseError, parse_pd, unknot


def relabel(l: LinkDiagram, rng: random.Random) -> LinkDiagram:
    labels = l.labels()
    image = labels[:]
    rng.shuffle(image)
    m = dict(zip(labels, image))
    crossings = [tuple(m[x] for x in c) for c in l.crossings]
    rng.shuffle(crossings)
    # rotating by two keeps the same unoriented crossing
    crossings = [c[2:] + c[:2] if rng.random() < 0.5 else c for c in crossings]
    return LinkDiagram(tuple(crossings), l.free_loops)


def test_trefoil_structure(trefoil):
    assert trefoil.n_crossings == 3
    assert len(trefoil.arcs()) == 3
    assert trefoil.n_components() == 1
    assert trefoil.crossing_signs() == [-1, -1, -1]


def test_figure_eight_structure(figure_eight):
    assert len(figure_eight.arcs()) == 4
    assert figure_eight.n_components() == 1
    assert sorted(figure_eight.crossing_signs()) == [-1, -1, 1, 1]


def test_unknot():
    u = unknot()
    assert u.n_crossings == 0 and u.n_components() == 1
    assert u.arcs() == [()]
    assert parse_pd("L 1") == u
    assert parse_pd("") == LinkDiagram()


@pytest.mark.parametrize("text", ["X[1,2,3]", "X[1,2,3,4,5]", "Y[1,2,3,4]", "X[1,2,a,4]",
                                  "X[1,1,2,3]", "X[1,2,3,4] X[1,2,3,5]"])
def test_parse_errors(text):
    with pytest.raises(PDParseError):
        parse_pd(text)


def test_pd_text_round_trip(trefoil, figure_eight):
    for l in (trefoil, figure_eight):
        assert parse_pd(l.pd_code()).is_isomorphic(l)
    assert parse_pd(TREFOIL).pd_code() == TREFOIL
    assert parse_pd(FIGURE_EIGHT).pd_code() == FIGURE_EIGHT


def test_isomorphism_under_relabelling(trefoil, figure_eight):
    rng = random.Random(0)
    for l in (trefoil, figure_eight):
        for _ in range(10):
            assert relabel(l, rng).is_isomorphic(l)
    assert not trefoil.is_isomorphic(figure_eight)


def test_trefoil_is_not_its_mirror_diagram(trefoil):
    assert not trefoil.is_isomorphic(trefoil.mirror())
    assert trefoil.mirror().mirror().is_isomorphic(trefoil)


def test_random_gluings_relabel():
    rng = random.Random(1)
    for _ in range(30):
        l = random_gluing(rng.randint(1, 6), rng)
        assert relabel(l, rng).is_isomorphic(l)


def test_free_loops_count():
    assert not unknot().is_isomorphic(LinkDiagram((), 2))
    assert LinkDiagram((), 2).n_components() == 2


def test_split_loop_removal():
    # a circle (labels 9, 10) passing over trefoil strand 5 twice
    split = parse_pd("X[1,4,2,5] X[5,9,7,10] X[7,10,8,9] X[3,6,4,1] X[8,2,6,3]")
    peel = split.without_split_loops()
    assert peel.free_loops == 1
    assert peel.is_isomorphic(LinkDiagram(parse_pd(TREFOIL).crossings, 1))


def test_split_loops_leave_trefoil_alone(trefoil):
    assert trefoil.without_split_loops() == trefoil


def test_gauss_code(trefoil):
    lines = trefoil.gauss_code().splitlines()
    assert len(lines) == 1
    assert lines[0].split() == ["U1-", "O3-", "U2-", "O1-", "U3-", "O2-"]


def test_figure_eight_literal():
    assert parse_pd(FIGURE_EIGHT).n_crossings == 4


def test_function_aliases(trefoil):
    from thompsonlinks import arcs_of, components_of, gauss_code, pd_code
    assert arcs_of(trefoil) == trefoil.arcs()
    assert components_of(unknot()) == 1 and arcs_of(unknot()) == [()]
    assert pd_code(trefoil) == TREFOIL
    assert gauss_code(trefoil) == trefoil.gauss_code()
