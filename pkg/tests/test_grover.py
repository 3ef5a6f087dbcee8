import numpy as np
import pytest

from groverqss.catalog import initial_state
from groverqss.grover import (
    collective_op,
    decode_phase1,
    decode_phase2,
    diffusion_apply,
    encode,
    iteration_count,
    oracle_apply,
    sample,
)
from groverqss.statevec import basis_state, distribution, state

SQRT8 = np.sqrt(8.0)


# Independent dense-matrix oracle: build the 8x8 reflections explicitly.
def oracle_matrix(idx, dim=8):
    u = np.eye(dim, dtype=complex)
    u[idx, idx] = -1
    return u


def diffusion_matrix(s):
    return 2 * np.outer(s.amps, s.amps.conj()) - np.eye(s.dim)


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (4, 3)])
def test_iteration_count(n, expected):
    assert iteration_count(n) == expected


def test_iteration_count_invalid():
    with pytest.raises(ValueError):
        iteration_count(0)


def test_oracle_negates_marked():
    s = oracle_apply(initial_state(1), "110")
    expected = np.full(8, 1 / SQRT8, dtype=complex)
    expected[6] = -1 / SQRT8
    assert s.amps == pytest.approx(expected, abs=1e-12)


def test_oracle_involution():
    s = initial_state(9)
    assert oracle_apply(oracle_apply(s, "011"), "011").isclose(s)


def test_oracle_orthogonal_noop():
    s = basis_state("000")
    assert oracle_apply(s, "111").isclose(s)


def test_oracle_label_mismatch():
    with pytest.raises(ValueError):
        oracle_apply(basis_state("00"), "110")


def test_diffusion_first_iteration_amplitudes():
    # one oracle + one diffusion on |+++> with mark 110: amplitude 5/(2*sqrt8)
    # at the mark and 1/(2*sqrt8) elsewhere
    s1 = initial_state(1)
    st = diffusion_apply(oracle_apply(s1, "110"), s1)
    expected = np.full(8, 1 / (2 * SQRT8), dtype=complex)
    expected[6] = 5 / (2 * SQRT8)
    assert st.amps == pytest.approx(expected, abs=1e-12)


def test_diffusion_fixed_point():
    s = initial_state(17)
    assert diffusion_apply(s, s).isclose(s)


def test_diffusion_involution():
    s = encode(initial_state(3), "011")
    about = initial_state(12)
    assert diffusion_apply(diffusion_apply(s, about), about).isclose(s)


def test_diffusion_matches_dense_matrix():
    rng = np.random.default_rng(2)
    about = initial_state(9)
    u = diffusion_matrix(about)
    for _ in range(10):
        a = rng.normal(size=8) + 1j * rng.normal(size=8)
        s = state(a / np.linalg.norm(a))
        assert diffusion_apply(s, about).amps == pytest.approx(u @ s.amps, abs=1e-12)


def test_encode_s1():
    enc = encode(initial_state(1), "110")
    assert enc.amp("110") == pytest.approx(-1 / SQRT8, abs=1e-12)
    assert enc.amp("000") == pytest.approx(1 / SQRT8, abs=1e-12)


def test_encode_s9():
    # |+i,+i,+i> has amplitude i^popcount(j)/sqrt8; encoding negates the mark
    enc = encode(initial_state(9), "110")
    expected = np.array([1j ** bin(j).count("1") for j in range(8)]) / SQRT8
    expected[6] *= -1
    assert enc.amps == pytest.approx(expected, abs=1e-12)


def test_decode_phase1_matching_k():
    enc = encode(initial_state(1), "110")
    res = decode_phase1(enc, initial_state(1))
    assert res.argmax_set == frozenset({"110"})
    assert res.chosen_M == "110"
    assert res.max_prob == pytest.approx(25 / 32, abs=1e-12)


def test_decode_phase1_tied_set():
    enc = encode(initial_state(1), "110")
    res = decode_phase1(enc, initial_state(2))
    assert res.argmax_set == frozenset({"000", "010", "100"})
    assert res.chosen_M == "000"  # lexicographic tie-break
    assert res.max_prob == pytest.approx(9 / 32, abs=1e-12)


def test_decode_phase1_override():
    enc = encode(initial_state(1), "110")
    res = decode_phase1(enc, initial_state(7), choose="001")
    assert res.chosen_M == "001"
    with pytest.raises(ValueError, match="argmax"):
        decode_phase1(enc, initial_state(7), choose="110")


def test_decode_phase1_s9_matches_dense_oracle():
    enc = encode(initial_state(9), "110")
    res = decode_phase1(enc, initial_state(9))
    expected = diffusion_matrix(initial_state(9)) @ enc.amps
    assert res.state.amps == pytest.approx(expected, abs=1e-12)
    assert res.argmax_set == frozenset({"110"})
    assert res.max_prob == pytest.approx(25 / 32, abs=1e-12)


def test_decode_phase2_full_pipeline_amplitudes():
    s1 = initial_state(1)
    p1 = decode_phase1(encode(s1, "110"), s1)
    final, dist = decode_phase2(p1.state, "110", s1)
    expected = np.full(8, -1 / (4 * SQRT8), dtype=complex)
    expected[6] = 11 / (4 * SQRT8)
    assert final.amps == pytest.approx(expected, abs=1e-12)
    assert dist[6] == pytest.approx(121 / 128, abs=1e-12)


def test_decode_phase2_k10_chain():
    enc = encode(initial_state(1), "110")
    p1, final, dist = collective_op(enc, initial_state(10))
    assert p1.argmax_set == frozenset({"001"})
    assert round(float(dist.max()), 3) == 0.477
    assert np.argmax(dist) == 1  # |001>


def test_collective_op_k9_five_way():
    enc = encode(initial_state(1), "110")
    p1, final, dist = collective_op(enc, initial_state(9))
    assert p1.chosen_M == "111"
    top = sorted(format(i, "03b") for i in range(8) if dist[i] >= dist.max() - 1e-9)
    assert top == ["000", "011", "101", "110", "111"]
    assert round(float(dist.max()), 3) == 0.195


def test_pipeline_preserves_probability():
    for k in range(1, 65):
        sk = initial_state(k)
        for m in ("110", "011", "101"):
            _, _, dist = collective_op(encode(sk, m), sk)
            assert dist.sum() == pytest.approx(1.0, abs=1e-12)


def test_sample_deterministic():
    s1 = initial_state(1)
    _, final, _ = collective_op(encode(s1, "110"), s1)
    a = sample(final, 2048, seed=42)
    b = sample(final, 2048, seed=42)
    assert a == b
    assert sum(a.counts.values()) == 2048


def test_sample_basis_state():
    counts = sample(basis_state("110"), 100, seed=0)
    assert counts.counts == {"110": 100}


def test_sample_empirical_close():
    s1 = initial_state(1)
    _, final, _ = collective_op(encode(s1, "110"), s1)
    counts = sample(final, 8192, seed=7)
    assert abs(counts.frequency("110") - 121 / 128) < 0.01


def test_sample_zero_shots():
    with pytest.raises(ValueError):
        sample(basis_state("000"), 0, seed=1)
