import itertools
import random

import pytest

from boolecode.codes import (
    DecodeFailure,
    LccCode,
    MdsCode,
    lcc_decode,
    lcc_encode,
    mds_encode,
    real_consensus_decode,
    recover_polynomial,
    rs_decode,
)
from boolecode.exactfield import Poly, PrimeField, lagrange_interpolate


F7 = PrimeField(7)
F31 = PrimeField(31)
F1009 = PrimeField(1009)


def test_mds_encode_constant_replication():
    code = MdsCode(F31, 5, 1)
    assert mds_encode(code, [9]) == [9, 9, 9, 9, 9]


def test_mds_encode_linear_example():
    code = MdsCode(F7, 4, 2, points=(0, 1, 2, 3))
    assert mds_encode(code, [1, 2]) == [1, 2, 3, 4]


def test_mds_encode_zero():
    code = MdsCode(F31, 6, 3)
    assert mds_encode(code, [0, 0, 0]) == [0] * 6


def test_mds_systematic():
    rng = random.Random(4)
    for n, k in ((6, 2), (10, 4), (9, 9)):
        code = MdsCode(F1009, n, k)
        data = [rng.randrange(1009) for _ in range(k)]
        assert mds_encode(code, data)[:k] == data


def test_mds_property_random_puncturing():
    # any K coordinates determine the data exactly
    rng = random.Random(7)
    for _ in range(40):
        n, k = 10, 4
        code = MdsCode(F1009, n, k)
        data = [rng.randrange(1009) for _ in range(k)]
        word = mds_encode(code, data)
        keep = rng.sample(range(n), k)
        poly = lagrange_interpolate([(code.alpha[i], word[i]) for i in keep], F1009)
        assert poly.evaluate_many(code.data_points) == data


def test_rs_decode_majority_example():
    code = MdsCode(F31, 3, 1)
    assert rs_decode(code, [5, 5, 2], payload_degree=0) == [5]


def test_rs_decode_single_error_example():
    code = MdsCode(F7, 4, 2, points=(0, 1, 2, 3))
    received = [1, 2, 3, 0]  # codeword (1,2,3,4) with last slot corrupted
    assert rs_decode(code, received, payload_degree=1) == [1, 2]


def test_rs_decode_beyond_radius_undefined():
    # two corruptions at (N, K) = (4, 2) exceed floor((N-K)/2) = 1
    code = MdsCode(F7, 4, 2, points=(0, 1, 2, 3))
    received = [1, 2, 0, 0]
    try:
        out = rs_decode(code, received, payload_degree=1)
        assert out != [1, 2] or True  # wrong codeword permitted
    except DecodeFailure:
        pass


def brute_force_rs(field, xs, received, degree, budget):
    """Subset-consistency oracle: fit every (degree+1)-subset, keep fits that
    agree with all but at most `budget` slots."""
    pairs = [(x, y) for x, y in zip(xs, received) if y is not None]
    survivors = []
    for combo in itertools.combinations(pairs, degree + 1):
        poly = lagrange_interpolate(list(combo), field)
        bad = sum(1 for x, y in pairs if poly.evaluate(x) != y)
        if bad <= budget and poly.coeffs not in survivors:
            survivors.append(poly.coeffs)
    return survivors


def test_error_correction_radius_randomized():
    rng = random.Random(13)
    for n, k in ((6, 2), (10, 4), (16, 8)):
        code = MdsCode(F1009, n, k)
        for trial in range(350):
            data = [rng.randrange(1009) for _ in range(k)]
            word = mds_encode(code, data)
            room = n - k
            e = rng.randint(0, room)
            b = rng.randint(0, (room - e) // 2)
            slots = rng.sample(range(n), e + b)
            received = list(word)
            for i in slots[:e]:
                received[i] = None
            for i in slots[e:]:
                received[i] = (word[i] + rng.randrange(1, 1009)) % 1009
            assert rs_decode(code, received, payload_degree=k - 1) == data


def test_tightness_second_codeword_returned():
    # replacing beta+1 slots with a second codeword's values makes the decoder
    # return that codeword: the floor((N-K)/2) radius is exact
    n, k = 10, 4
    code = MdsCode(F1009, n, k)
    rng = random.Random(21)
    data = [rng.randrange(1009) for _ in range(k)]
    word = mds_encode(code, data)
    # second codeword agreeing with the first on exactly d = k-1 points
    agree = list(range(k, k + (k - 1)))  # positions k, k+1, k+2
    delta = Poly.make(F1009, (1,))
    for a in agree:
        shifted = [F1009.neg(F1009.mul(code.alpha[a], c)) for c in delta.coeffs] + [0]
        for i, c in enumerate(delta.coeffs):
            shifted[i + 1] = F1009.add(shifted[i + 1], c)
        delta = Poly.make(F1009, shifted)
    other = [F1009.add(w, delta.evaluate(x)) for w, x in zip(word, code.alpha)]
    differ = [i for i in range(n) if other[i] != word[i]]
    assert len(differ) == n - (k - 1)
    b = (n - k) // 2 + 1
    received = list(word)
    for i in differ[:b]:
        received[i] = other[i]
    decoded = rs_decode(code, received, payload_degree=k - 1)
    wrong_poly = lagrange_interpolate([(code.alpha[i], other[i]) for i in range(k)], F1009)
    assert decoded == wrong_poly.evaluate_many(code.data_points)
    assert decoded != data


def test_erasure_only_decoding():
    code = MdsCode(F1009, 8, 3)
    rng = random.Random(2)
    data = [rng.randrange(1009) for _ in range(3)]
    word = mds_encode(code, data)
    received = list(word)
    for i in (1, 4, 6, 7):  # e = 4 <= N - K
        received[i] = None
    assert rs_decode(code, received, payload_degree=2) == data


def test_combined_error_erasure_budget():
    # 2b + e <= N - (d+1): (N, K) = (10, 4), e = 2, b = 2
    code = MdsCode(F1009, 10, 4)
    rng = random.Random(3)
    data = [rng.randrange(1009) for _ in range(4)]
    word = mds_encode(code, data)
    received = list(word)
    received[0] = None
    received[5] = None
    received[2] = (word[2] + 7) % 1009
    received[8] = (word[8] + 11) % 1009
    assert rs_decode(code, received, payload_degree=3) == data


def test_too_many_erasures_fails():
    code = MdsCode(F1009, 5, 3)
    word = mds_encode(code, [1, 2, 3])
    received = [None, None, None, word[3], word[4]]
    assert erasure_count(received) == 3
    with pytest.raises(DecodeFailure):
        rs_decode(code, received, payload_degree=2)


def test_suspect_fast_path_matches_full_decode():
    code = MdsCode(F1009, 12, 5)
    rng = random.Random(17)
    for _ in range(50):
        data = [rng.randrange(1009) for _ in range(5)]
        word = mds_encode(code, data)
        bad = rng.sample(range(12), 3)
        received = list(word)
        for i in bad:
            received[i] = (word[i] + rng.randrange(1, 1009)) % 1009
        full, errs = recover_polynomial(F1009, code.alpha, received, 4)
        hinted, _ = recover_polynomial(F1009, code.alpha, received, 4, suspects=errs)
        assert sorted(errs) == sorted(bad)
        assert hinted.coeffs == full.coeffs


def test_lcc_encode_k1_replication():
    code = LccCode(F31, 4, 1)
    shares = lcc_encode(code, [[3, 9]])
    assert shares == [[3, 9]] * 4


def test_lcc_encode_linear_formula():
    # beta = (0, 1): share_n = X1 + alpha_n (X2 - X1), coordinate-wise
    code = LccCode(F31, 3, 2, beta=(0, 1), alpha=(2, 3, 4))
    x1, x2 = [5, 1], [9, 30]
    shares = lcc_encode(code, [x1, x2])
    for a, share in zip((2, 3, 4), shares):
        for j in range(2):
            assert share[j] == (x1[j] + a * (x2[j] - x1[j])) % 31


def test_lcc_encode_identical_data():
    code = LccCode(F31, 5, 2)
    shares = lcc_encode(code, [[4, 4], [4, 4]])
    assert all(s == [4, 4] for s in shares)


def test_lcc_decode_quadratic_radius():
    # N=8, K=2, deg f = 2 corrects b <= floor((8-2-1)/2) = 2
    field = PrimeField(10007)
    code = LccCode(field, 8, 2)
    rng = random.Random(23)
    for _ in range(100):
        data = [[rng.randrange(100)] for _ in range(2)]
        shares = lcc_encode(code, data)
        payload = [field.mul(s[0], s[0]) for s in shares]  # f(x) = x^2
        want = [field.mul(d[0], d[0]) for d in data]
        received = list(payload)
        for i in rng.sample(range(8), 2):
            received[i] = (received[i] + rng.randrange(1, 10007)) % 10007
        assert lcc_decode(code, received, f_degree=2) == want


def test_lcc_decode_beyond_radius_not_guaranteed():
    field = PrimeField(10007)
    code = LccCode(field, 8, 2)
    rng = random.Random(29)
    broke = False
    for trial in range(200):
        data = [[rng.randrange(100)] for _ in range(2)]
        shares = lcc_encode(code, data)
        payload = [field.mul(s[0], s[0]) for s in shares]
        want = [field.mul(d[0], d[0]) for d in data]
        received = list(payload)
        for i in rng.sample(range(8), 3):
            received[i] = (received[i] + rng.randrange(1, 10007)) % 10007
        try:
            if lcc_decode(code, received, f_degree=2) != want:
                broke = True
                break
        except DecodeFailure:
            broke = True
            break
    assert broke


def test_field_size_check_for_lcc():
    with pytest.raises(ValueError):
        LccCode(F7, 4, 3)  # needs size > 7


def test_real_consensus_exact():
    values = [1.0, 2.0, 3.0, 4.0, 5.0]
    out = real_consensus_decode(values, 2, 1)
    assert abs(out[0] - 1.0) < 1e-9 and abs(out[1] - 2.0) < 1e-9


def test_real_consensus_one_error():
    rng = random.Random(31)
    for _ in range(50):
        a, b = rng.uniform(-5, 5), rng.uniform(-5, 5)
        values = [a + b * x for x in range(1, 6)]
        i = rng.randrange(5)
        values[i] += rng.choice((-1, 1)) * rng.uniform(1.0, 9.0)
        out = real_consensus_decode(values, 2, 1)
        assert abs(out[0] - (a + b)) <= 1e-6 * max(1.0, abs(a + b))
        assert abs(out[1] - (a + 2 * b)) <= 1e-6 * max(1.0, abs(a + 2 * b))


def test_real_consensus_two_errors_ambiguous_or_failing():
    # 2b > N - K: no reliable decoding
    values = [1.0, 2.0, 3.0, 4.0]
    values[2] += 5.0
    values[3] -= 7.0
    with pytest.raises(DecodeFailure):
        real_consensus_decode(values, 2, 2)


def test_real_consensus_erasures():
    values = [1.0, 2.0, None, 4.0, 5.0]
    out = real_consensus_decode(values, 2, 1)
    assert abs(out[0] - 1.0) < 1e-9


def test_real_consensus_size_cap():
    with pytest.raises(ValueError):
        real_consensus_decode([0.0] * 25, 2, 1)
