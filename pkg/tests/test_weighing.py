import numpy as np
import pytest

from signed_ste.core import GraphError, SignedMatrix
from signed_ste.spectra import is_weighing, verify_ste_exact
from signed_ste.weighing import (PatternError, PatternMatrix, WeighPair, _hadamard4,
                                 assemble_block, block8, block_pair, build_w, expand_f,
                                 expand_r, kronecker, pattern_x, pattern_y,
                                 search_m4_pairs, semi_orthogonal)

# Reference W1, W2 for m = 14, transcribed by hand ('+' = 1, '-' = -1).
W1_14 = """
++0000000000++
+-++0000000000
00+-++00000000
0000+-++000000
000000+-++0000
00000000+-++00
0000000000+-+-
++0000000000--
+---0000000000
00+---00000000
0000+---000000
000000+---0000
00000000+---00
0000000000+--+
"""

W2_14 = """
00++000000++00
0000++000000++
++0000++000000
00+-0000++0000
0000+-0000+-00
000000+-0000+-
+-000000+-0000
00++000000--00
0000++000000--
++0000--000000
00+-0000--0000
0000+-0000-+00
000000+-0000-+
+-000000-+0000
"""

X_7 = """
1000001
1100000
0110000
0011000
0001100
0000110
0000011
"""

Y_7 = """
0100010
0010001
1001000
0100100
0010010
0001001
1000100
"""


def parse_signs(text):
    table = {"+": 1, "-": -1, "0": 0, "1": 1}
    return np.array([[table[c] for c in line] for line in text.split()], dtype=np.int64)


class TestPatterns:
    def test_order_seven_patterns(self):
        assert np.array_equal(pattern_x(14).entries, parse_signs(X_7))
        assert np.array_equal(pattern_y(14).entries, parse_signs(Y_7))

    @pytest.mark.parametrize("m", range(8, 42, 2))
    def test_disjoint(self, m):
        assert pattern_x(m).disjoint_from(pattern_y(m))

    def test_formula_variant_collides_at_m8(self):
        assert not pattern_x(8, "formula").disjoint_from(pattern_y(8))

    @pytest.mark.parametrize("m", [6, 7, 4])
    def test_rejects_small_or_odd(self, m):
        with pytest.raises(PatternError):
            pattern_x(m)

    def test_pattern_validation(self):
        with pytest.raises(PatternError):
            PatternMatrix(np.eye(3, dtype=int))


class TestExpansion:
    def test_m14_matches_reference(self):
        pair = block_pair(14)
        assert np.array_equal(pair.W1.entries, parse_signs(W1_14))
        assert np.array_equal(pair.W2.entries, parse_signs(W2_14))

    def test_f_and_r_blocks(self):
        F = expand_f(pattern_x(14))
        R = expand_r(F)
        ref = parse_signs(W1_14)
        assert np.array_equal(F.entries, ref[:7]) and np.array_equal(R.entries, ref[7:])

    def test_expand_r_needs_four_nonzeros(self):
        with pytest.raises(PatternError):
            expand_r(np.array([[1, 1, 0, 0]]))

    @pytest.mark.parametrize("m", range(8, 42, 2))
    def test_weight_four(self, m):
        for pat in (pattern_x(m), pattern_y(m)):
            assert is_weighing(build_w(pat), 4)

    def test_formula_variant_not_semi_orthogonal(self):
        pair = block_pair(8, residues="formula")
        assert semi_orthogonal(pair.W1, pair.W2) is None


class TestBlock:
    @pytest.mark.parametrize("m", [8, 10, 14, 20])
    def test_block8_identity(self, m):
        g = block8(m)
        A = g.adj
        assert np.array_equal(A @ A, 2 * A + 8 * np.eye(3 * m, dtype=np.int64))
        s = verify_ste_exact(g)
        assert (s.lambda1, s.lambda2, s.m1, s.m2) == (4, -2, m, 2 * m)

    def test_assemble_rejects_bad_pair(self):
        W = np.eye(4, dtype=np.int64)
        with pytest.raises(GraphError, match="weighing"):
            assemble_block(WeighPair(SignedMatrix(W), SignedMatrix(W)))

    def test_assemble_names_bad_entry(self):
        H = _hadamard4()[0]
        with pytest.raises(GraphError, match=r"entry 4 at"):
            assemble_block(WeighPair(SignedMatrix(H), SignedMatrix(H)))

    def test_semi_orthogonal_dimension_mismatch(self):
        with pytest.raises(ValueError):
            semi_orthogonal(np.eye(2), np.eye(3))


class TestSearch:
    def test_hadamard_count(self):
        assert len(_hadamard4()) == 768

    def test_finds_twelve_vertex_ste(self):
        pairs = search_m4_pairs()
        assert len(pairs) == 2304
        s = verify_ste_exact(assemble_block(pairs[0]))
        assert (s.lambda1, s.lambda2, s.m1, s.m2) == (4, -2, 4, 8)

    def test_every_hit_is_ste(self):
        for pair in search_m4_pairs()[::97]:
            assert verify_ste_exact(assemble_block(pair)) is not None

    def test_limit(self):
        assert len(search_m4_pairs(limit=0)) == 0
        assert len(search_m4_pairs(limit=10)) <= 10

    def test_deterministic(self):
        a, b = search_m4_pairs(limit=200), search_m4_pairs(limit=200)
        assert [p.W2 for p in a] == [p.W2 for p in b]


class TestKronecker:
    def test_hadamard_doubling(self):
        H = np.array([[1, 1], [1, -1]])
        assert is_weighing(kronecker(H, 2, H, 2), 4)

    def test_identity_factor(self):
        W = build_w(pattern_x(8))
        K = kronecker(np.eye(2, dtype=int), 1, W, 4)
        assert K.shape == (16, 16) and is_weighing(K, 4)

    def test_weight_sixteen(self):
        W = build_w(pattern_x(8))
        K = kronecker(W, 4, W, 4)
        assert K.shape == (64, 64) and is_weighing(K, 16)

    def test_rejects_non_weighing_factor(self):
        with pytest.raises(ValueError):
            kronecker(np.ones((2, 2)), 2, np.eye(2), 1)
