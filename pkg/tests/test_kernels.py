import random

import pytest

from rulehide import _pykernels

try:
    from rulehide import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


def _random_rows(rng, n, m, density):
    return [[i for i in range(m) if rng.random() < density] for _ in range(n)]


def _scan_count(rows, itemset):
    return sum(1 for r in rows if set(itemset) <= set(r))


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__)
@pytest.mark.parametrize("n", [0, 1, 63, 64, 65, 130])
def test_count_and_tids_against_scan(backend, n):
    rng = random.Random(n)
    m = 6
    rows = _random_rows(rng, n, m, 0.6)
    index = backend.BitIndex(rows, m)
    cands = [(), (0,), (1, 2), (0, 3, 5), (1, 2, 3, 4)]
    assert index.count(cands) == [_scan_count(rows, c) for c in cands]
    for c in cands:
        assert index.tids(c) == [t for t, r in enumerate(rows, 1) if set(c) <= set(r)]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__)
def test_discard_and_copy(backend):
    rows = [[0, 1]] * 70
    index = backend.BitIndex(rows, 2)
    clone = index.copy()
    index.discard(0, 70)
    index.discard(0, 3)
    assert index.count([(0,), (0, 1), (1,)]) == [68, 68, 70]
    assert 70 not in index.tids((0,))
    assert clone.count([(0,)]) == [70]


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree():
    rng = random.Random(7)
    for _ in range(50):
        n, m = rng.randint(0, 200), rng.randint(1, 10)
        rows = _random_rows(rng, n, m, rng.random())
        py, cy = _pykernels.BitIndex(rows, m), _ckernels.BitIndex(rows, m)
        k = rng.randint(1, m)
        cands = [tuple(sorted(rng.sample(range(m), k))) for _ in range(20)]
        assert py.count(cands) == cy.count(cands)
        assert py.tids(cands[0]) == cy.tids(cands[0])


def test_kernels_module_selects_a_backend():
    from rulehide import kernels

    assert kernels.BACKEND in ("cython", "python")
