"""The quotient lattice at a null direction and its root classes."""

import pytest

import oracles
from vinberg import quotient
from vinberg.forms import Form
from vinberg.published import NONREFLECTIVITY_BLOCKS


@pytest.mark.parametrize("p,n", sorted(NONREFLECTIVITY_BLOCKS))
def test_null_quotient_structure(p, n):
    form = Form(p, n)
    e = NONREFLECTIVITY_BLOCKS[(p, n)]["null_vector"]
    quot = quotient.null_quotient(form, e)
    assert quot.rank == n - 1
    assert len(quot.class_basis) == n - 1
    # class basis vectors really lie in e-perp
    for b in quot.class_basis:
        assert form.inner_product(b, e) == 0
    # lift/coordinates round trip
    for i in range(quot.rank):
        coords = [1 if j == i else 0 for j in range(quot.rank)]
        v = quot.lift(coords)
        assert quot.class_coordinates(v) == coords


def test_quotient_rejects_bad_vectors():
    form = Form(7, 4)
    with pytest.raises(ValueError):
        quotient.null_quotient(form, (1, 0, 0, 0, 0))  # norm -7
    with pytest.raises(ValueError):
        quotient.null_quotient(form, (2, 4, 2, 2, 2))  # not primitive


def _classes(quot, bound):
    from vinberg import linalg

    return list(linalg.short_vectors([list(r) for r in quot.gram], bound))


def test_root_class_shift_matches_wide_window_oracle():
    # the fast path scans t in [0, m); the oracle scans [-10m, 10m).
    # Exhaustive on the small quotients, a fixed sample on the rank-8 one.
    import random

    for p, n, sample in ((7, 4, None), (13, 3, None), (5, 9, 150)):
        form = Form(p, n)
        e = NONREFLECTIVITY_BLOCKS[(p, n)]["null_vector"]
        quot = quotient.null_quotient(form, e)
        classes = _classes(quot, 2 * p)
        if sample is not None and len(classes) > sample:
            classes = random.Random(0).sample(classes, sample)
        assert classes
        for coords in classes:
            fast = quotient.root_class_shift(form, quot, list(coords))
            wide = oracles.root_class_witness_window(form, quot, list(coords))
            assert (fast is None) == (wide is None), (p, n, coords, fast, wide)


def test_rank_deficit_at_first_failures():
    # the certified obstructions: root classes span a proper-rank sublattice
    for p, n in ((5, 9), (7, 4)):
        form = Form(p, n)
        e = NONREFLECTIVITY_BLOCKS[(p, n)]["null_vector"]
        quot = quotient.null_quotient(form, e)
        rc = quotient.root_classes(form, quot)
        assert not rc["full_rank"]
        assert rc["rank"] < quot.rank


def test_full_rank_with_index_two_at_genuine_cusp():
    # regression: the 7-wall chamber of this form has a real ideal vertex
    # whose root classes generate a sublattice of index 2.  Rank, not
    # index, is the sound obstruction test; this vertex must not be
    # flagged.
    form = Form(11, 3)
    e = (1, 3, 1, 1)
    assert form.norm(e) == 0
    quot = quotient.null_quotient(form, e)
    rc = quotient.root_classes(form, quot)
    assert rc["full_rank"]
    assert rc["rank"] == quot.rank == 2
    assert rc["index"] == 2


def test_published_blocks_reproduce_as_lattice_data():
    # complement generator norms and glue data from the published blocks
    # are facts about the null vector's quotient lattice; check them
    # directly from the stored component root classes
    for (p, n), blk in sorted(NONREFLECTIVITY_BLOCKS.items()):
        form = Form(p, n)
        quot = quotient.null_quotient(form, blk["null_vector"])
        comp = blk["complement_vector"]
        assert form.norm(comp) == blk["complement_norm"]
        assert form.inner_product(comp, blk["null_vector"]) == 0
        if blk["glue_vector"] is not None:
            assert form.inner_product(blk["glue_vector"], blk["null_vector"]) == 0


def test_complement_data_on_the_a2_cusp_failure(search):
    # at (7, 4): affine A~2 triple, rank-1 complement of norm 21 with an
    # order-3 glue class, matching the stored reference block
    form = Form(7, 4)
    blk = NONREFLECTIVITY_BLOCKS[(7, 4)]
    quot = quotient.null_quotient(form, blk["null_vector"])
    roots = search(7, 4).roots
    image = []
    for r in roots:
        if form.inner_product(r, blk["null_vector"]) == 0:
            image.append(quot.class_coordinates(r))
    data = quotient.orthogonal_complement_data(form, quot, image)
    assert data.get("generator_norm") == blk["complement_norm"]
    assert data.get("glue_order") == blk["glue_order"]
