import random

import pytest

from tamari.bijections import (
    ChainDecomposition,
    GrowthDomainError,
    NoPlusFullSetError,
    append_next_label,
    chain_without_plus_full_sets,
    decompose,
    expand_chain,
    extract_plus_full_set,
    insert_plus_full_set,
    pivot_row,
    recompose,
    repeat_row,
    unrepeat_row,
)
from tamari.checks import (
    VerifyLimits,
    check_append_bijection,
    check_decomposition,
    check_growth_image_counts,
    check_label_shift,
    check_repeat_row_characterization,
    random_maximal_chain,
)
from tamari.tableaux import Tableau, TableauError, is_chain_tableau, plus_full_set_labels

BASE = Tableau(3, ((1, 2), (3,)))  # the unique plus-full-set-free chain of order 3


def test_repeat_row():
    assert repeat_row(Tableau(4, ()), 2) == Tableau(5, ())
    assert repeat_row(BASE, 1).rows == ((1, 2), (1, 2), (3,))
    assert repeat_row(BASE, 3).rows == BASE.rows  # row 3 is empty
    assert repeat_row(BASE, 3).n == BASE.n + 1


def test_unrepeat_row():
    widened = Tableau(4, ((1, 2), (1, 2), (3,)))
    assert unrepeat_row(widened, 1) == BASE
    assert unrepeat_row(Tableau(3, ()), 2) == Tableau(2, ())
    with pytest.raises(TableauError):
        unrepeat_row(widened, 2)  # rows 2 and 3 differ


def test_repeat_row_roundtrip_random():
    rng = random.Random(5)
    for _ in range(400):
        tab = random_maximal_chain(6, rng)
        d = rng.randint(1, 6)
        assert unrepeat_row(repeat_row(tab, d), d) == tab


def test_append_next_label():
    assert append_next_label(Tableau(2, ()), 1).rows == ((1,),)
    grown = append_next_label(Tableau(4, ((1, 2), (1, 2), (3,))), 1)
    assert grown.rows == ((1, 2, 4), (1, 2), (3,))
    assert append_next_label(Tableau(4, ((1, 2), (1,))), 3).rows == \
        ((1, 2, 3), (1, 3), (3,))
    with pytest.raises(TableauError):
        append_next_label(Tableau(2, ((1,),)), 1)  # would overflow the ambient


def test_pivot_row_on_base_chain():
    assert pivot_row(BASE, 0) == 3
    assert pivot_row(BASE, 1) == 3
    assert pivot_row(BASE, 2) == 1
    assert pivot_row(BASE, 3) == 1


def test_pivot_sequence_identifies_published_seven_level_example():
    from tamari.counting import enumerate_maximal_chains

    nofull = [tab for tab in enumerate_maximal_chains(5, length=6)
              if not plus_full_set_labels(tab)]
    assert len(nofull) == 10
    target = (5, 5, 5, 3, 3, 1, 1)
    matches = [tab for tab in nofull
               if tuple(pivot_row(tab, r) for r in range(7)) == target]
    assert matches
    for tab in matches:
        for r in range(7):
            image = insert_plus_full_set(tab, r)
            assert image.n == 6 and image.length == 7
            assert plus_full_set_labels(image)[0] == r + 1


def test_expand_chain_examples():
    assert expand_chain(BASE, 0).rows == ((1, 2, 3), (1, 4), (1,))
    assert expand_chain(BASE, 3).rows == ((1, 2, 4), (1, 2), (3,))
    assert expand_chain(Tableau(1, ()), 0) == Tableau(2, ((1,),))
    middle = expand_chain(BASE, 1)
    assert middle.rows == ((1, 2, 3), (2, 4), (2,))
    assert is_chain_tableau(middle)


def test_insert_checks_the_domain(chains_by_order):
    short = Tableau(3, ((1, 2), (1,)))  # labels 1 and 2 are both plus-full
    with pytest.raises(GrowthDomainError) as info:
        insert_plus_full_set(short, 1)
    assert info.value.label == 1
    for tab in chains_by_order[4]:
        labels = plus_full_set_labels(tab)
        if labels:
            with pytest.raises(GrowthDomainError):
                insert_plus_full_set(tab, labels[0])


def test_extract_examples():
    assert extract_plus_full_set(Tableau(4, ((1, 2, 4), (1, 2), (3,)))) == (3, BASE)
    assert extract_plus_full_set(Tableau(4, ((1, 2, 3), (1, 4), (1,)))) == (0, BASE)
    assert extract_plus_full_set(Tableau(2, ((1,),))) == (0, Tableau(1, ()))
    with pytest.raises(NoPlusFullSetError):
        extract_plus_full_set(BASE)


def test_growth_roundtrip_exhaustive(chains_by_order):
    for n in range(1, 6):
        for tab in chains_by_order[n]:
            labels = plus_full_set_labels(tab)
            bound = labels[0] - 1 if labels else tab.length
            for r in range(bound + 1):
                grown = insert_plus_full_set(tab, r)
                assert is_chain_tableau(grown)
                assert len(plus_full_set_labels(grown)) == len(labels) + 1
                assert extract_plus_full_set(grown) == (r, tab)


def test_decompose_examples(chains_by_order):
    assert decompose(BASE) == ChainDecomposition(BASE, ())
    assert decompose(Tableau(4, ((1, 2, 4), (1, 2), (3,)))) == \
        ChainDecomposition(BASE, (3,))
    length_four = [tab for tab in chains_by_order[4] if tab.length == 4]
    assert len(length_four) == 4
    for tab in length_four:
        dec = decompose(tab)
        assert dec.base == BASE
        assert len(dec.params) == 1


def test_recompose_examples():
    assert recompose(ChainDecomposition(BASE, ())) == BASE
    assert recompose(ChainDecomposition(BASE, (3,))).rows == ((1, 2, 4), (1, 2), (3,))
    with pytest.raises(ValueError):
        recompose(ChainDecomposition(BASE, (2, 1)))  # not weakly increasing
    with pytest.raises(ValueError):
        recompose(ChainDecomposition(BASE, (4,)))  # level above the base length


def test_decomposition_roundtrip_exhaustive(chains_by_order):
    for n in range(1, 6):
        for tab in chains_by_order[n]:
            dec = decompose(tab)
            assert not plus_full_set_labels(dec.base)
            assert list(dec.params) == sorted(dec.params)
            expected = tuple(sorted(r + j + 1 for j, r in enumerate(dec.params)))
            assert plus_full_set_labels(tab) == expected
            assert recompose(dec) == tab


def test_witness_chains():
    assert chain_without_plus_full_sets(-1) == Tableau(1, ())
    assert chain_without_plus_full_sets(0) == BASE
    assert chain_without_plus_full_sets(1).rows == \
        ((1, 2, 3, 4), (1, 2, 5), (1, 2), (6,))
    for i in range(-1, 5):
        tab = chain_without_plus_full_sets(i)
        assert tab.n == max(2 * i + 3, 1)
        assert tab.length == max(3 * i + 3, 0)
        assert tab.is_staircase
        assert is_chain_tableau(tab)
        assert plus_full_set_labels(tab) == ()


def test_property_checks_small():
    limits = VerifyLimits(max_n=4, max_i=1, samples=200, seed=11)
    for check in (check_repeat_row_characterization, check_append_bijection,
                  check_label_shift, check_growth_image_counts,
                  check_decomposition):
        result = check(limits)
        assert result.passed, result
