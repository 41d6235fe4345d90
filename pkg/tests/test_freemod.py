import json

import pytest

from freebell.core import QPoly
from freebell.freemod import LinComb, Tensor2, bilinear_extend, render

q = QPoly.q()


def test_add_and_cancel():
    x = LinComb("F", {(1, 3, 2): 2, (2, 1): 1})
    assert not (x + x.scale(-1))
    assert x + x.scale(-1) == 0
    assert (x - x).terms == {}
    assert x[(9,)] == 0


def test_basis_and_domain_mismatch():
    with pytest.raises(TypeError):
        LinComb("F", {(1,): 1}) + LinComb("G", {(1,): 1})
    with pytest.raises(TypeError):
        LinComb("F", {(1,): 1}) + LinComb("F", {(1,): q})
    with pytest.raises(ValueError):
        LinComb("nope", {})


def test_scale_by_qpoly_promotes():
    x = LinComb("F", {(1, 3, 2): 1, (2, 3, 1): 1}).scale(1 + q)
    assert x.domain == "qpoly"
    assert len(x) == 2 and all(c == 1 + q for _, c in x.items())


def test_bilinear_extend_on_singletons():
    def op(a, b):
        return LinComb("word", {a + b: 1})

    ext = bilinear_extend(op, "word")
    assert ext(LinComb("word", {(1,): 1}), LinComb("word", {(2,): 1})) == op((1,), (2,))
    lhs = ext(LinComb("word", {(1,): 2, (3,): 1}), LinComb("word", {(2,): 1}))
    assert lhs == LinComb("word", {(1, 2): 2, (3, 2): 1})


def test_rendering():
    y = LinComb("Y", {(3,): 1, (2, 1): 2, (1, 2): 1, (1, 1, 1): 1})
    assert render(y) == "Y3 + 2 Y21 + Y12 + Y111"
    assert render(LinComb("QF", {(3,): 1})) == "F(3)"
    assert render(LinComb("G", {(1, 2): 1, (2, 1): -1})) == "G12 - G21"
    assert render(LinComb("Y", {(1, 1): q})) == "(q) Y11"
    assert render(LinComb("F", {})) == "0"


def test_json_round_trip():
    for x in (
        LinComb("QF", {(2, 1): 3, (1,): -1}),
        LinComb("G", {(1, 3, 2): 1}),
        LinComb("Y", {(2, 1): 1 + q}),
    ):
        text = x.to_json()
        assert LinComb.from_json(text) == x
        assert json.loads(text)["basis"] == x.basis


def test_tensor():
    a = LinComb("F", {(1,): 1})
    t = Tensor2.tensor(a, a) + Tensor2.tensor(a, a)
    assert t[((1,), (1,))] == 2
    assert " # " in str(t)
