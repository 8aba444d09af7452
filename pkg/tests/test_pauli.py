"""Symbolic Pauli word algebra and its numeric instantiation."""

import numpy as np
import pytest

from mbqcflow import (
    DimensionMismatchError,
    Gf2Expr,
    MissingOutcomeError,
    NonConstantExponentError,
    PauliWord,
)

from helpers import labels_to_matrix, phase_aligned_equal, random_expr, random_word

ONE = Gf2Expr.one()


def var(q):
    return Gf2Expr.var(q)


def word(qubits, x=None, z=None):
    return PauliWord(frozenset(qubits), x or {}, z or {})


def test_identity_int_and_iterable():
    w = PauliWord.identity(5)
    assert w.qubits == frozenset(range(5))
    assert w.is_identity
    assert w.instantiate({}) == {}
    assert PauliWord.identity([1, 4, 7]).qubits == frozenset({1, 4, 7})


def test_multiply_with_identity():
    rng = np.random.default_rng(3)
    for _ in range(50):
        w = random_word(rng, range(5))
        assert PauliWord.identity(5).multiply(w) == w
        assert w.multiply(PauliWord.identity(5)) == w


def test_multiply_cancels_paired_z():
    q = frozenset({1, 2, 3})
    a = word(q, z={1: var(1)})
    k2 = word(q, x={2: ONE}, z={1: ONE, 3: ONE}).pow(var(1))
    prod = a.multiply(k2)
    assert prod == word(q, x={2: var(1)}, z={3: var(1)})


def test_multiply_self_gives_identity():
    rng = np.random.default_rng(17)
    for _ in range(200):
        w = random_word(rng, range(6))
        assert w.multiply(w).is_identity


def test_multiply_dimension_check():
    with pytest.raises(DimensionMismatchError):
        PauliWord.identity(3).multiply(PauliWord.identity(4))


def test_five_qubit_wire_product():
    # Byproducts of the bundled 5-qubit wire times the accumulated
    # stabilizer powers leave exactly the known residue.
    q = frozenset(range(1, 6))
    byproduct = word(q, z={i: var(i) for i in range(1, 5)})
    k = {
        2: word(q, x={2: ONE}, z={1: ONE, 3: ONE}),
        3: word(q, x={3: ONE}, z={2: ONE, 4: ONE}),
        4: word(q, x={4: ONE}, z={3: ONE, 5: ONE}),
        5: word(q, x={5: ONE}, z={4: ONE}),
    }
    prod = (
        byproduct
        .multiply(k[2].pow(var(1)))
        .multiply(k[3].pow(var(2)))
        .multiply(k[4].pow(var(1).add(var(3))))
        .multiply(k[5].pow(var(2).add(var(4))))
    )
    expected = word(
        q,
        x={2: var(1), 3: var(2), 4: var(1).add(var(3)), 5: var(2).add(var(4))},
        z={5: var(1).add(var(3))},
    )
    assert prod == expected
    assert str(expected) == "X5^(s2^s4) Z5^(s1^s3) X4^(s1^s3) X3^s2 X2^s1"


def test_pow_replaces_unit_exponents():
    q = frozenset({1, 2, 3})
    k2 = word(q, x={2: ONE}, z={1: ONE, 3: ONE})
    raised = k2.pow(var(1))
    assert raised == word(q, x={2: var(1)}, z={1: var(1), 3: var(1)})


def test_pow_zero_and_one():
    rng = np.random.default_rng(8)
    for _ in range(50):
        x = {q: ONE for q in range(4) if rng.random() < 0.5}
        z = {q: ONE for q in range(4) if rng.random() < 0.5}
        w = word(range(4), x, z)
        assert w.pow(Gf2Expr.zero()).is_identity
        assert w.pow(ONE) == w


def test_pow_distributes_over_exponent_sum():
    rng = np.random.default_rng(21)
    pool = list(range(5))
    for _ in range(300):
        x = {q: ONE for q in pool if rng.random() < 0.5}
        z = {q: ONE for q in pool if rng.random() < 0.5}
        w = word(pool, x, z)
        e1, e2 = random_expr(rng, pool), random_expr(rng, pool)
        assert w.pow(e1.add(e2)) == w.pow(e1).multiply(w.pow(e2))


def test_pow_rejects_symbolic_words():
    w = word({1, 2}, x={1: var(2)})
    with pytest.raises(NonConstantExponentError):
        w.pow(ONE)


def test_instantiate_wire_correction():
    q = frozenset({5})
    corr = word(q, x={5: Gf2Expr.of([2, 4])}, z={5: Gf2Expr.of([1, 3])})
    allzero = {1: 0, 2: 0, 3: 0, 4: 0}
    assert corr.instantiate(allzero) == {}
    assert corr.instantiate({**allzero, 2: 1}) == {5: "X"}
    assert corr.instantiate({**allzero, 1: 1, 2: 1}) == {5: "XZ"}
    assert corr.instantiate({**allzero, 1: 1}) == {5: "Z"}


def test_instantiate_requires_total_assignment():
    w = word({1, 2}, x={1: var(2)})
    with pytest.raises(MissingOutcomeError):
        w.instantiate({})


def test_multiply_commutes_and_associates_symbolically():
    rng = np.random.default_rng(40)
    for _ in range(400):
        a = random_word(rng, range(5))
        b = random_word(rng, range(5))
        c = random_word(rng, range(5))
        assert a.multiply(b) == b.multiply(a)
        assert a.multiply(b).multiply(c) == a.multiply(b.multiply(c))


def test_instantiate_is_multiplicative_up_to_phase():
    # The operator of a product equals the composed operators, modulo the
    # discarded global phase; checked densely on up to 6 qubits.
    rng = np.random.default_rng(77)
    for _ in range(250):
        nq = int(rng.integers(1, 7))
        qubits = range(nq)
        a = random_word(rng, qubits)
        b = random_word(rng, qubits)
        m = {q: int(rng.integers(0, 2)) for q in qubits}
        lhs = labels_to_matrix(a.multiply(b).instantiate(m), qubits)
        rhs = labels_to_matrix(a.instantiate(m), qubits) @ labels_to_matrix(
            b.instantiate(m), qubits
        )
        assert phase_aligned_equal(lhs, rhs)


def test_rendering_identity_and_plain_terms():
    assert str(PauliWord.identity(3)) == "I"
    q = frozenset({0, 2})
    assert str(word(q, x={0: ONE})) == "X0"
    assert str(word(q, x={2: var(1)}, z={0: ONE})) == "X2^s1 Z0"
