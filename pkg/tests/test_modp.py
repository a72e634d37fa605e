import random
from itertools import islice

import pytest

from glpgalois.errors import BadPrimeError
from glpgalois.modp import (
    ALL_EVEN,
    CONTAINS_ODD,
    CycleType,
    degree_set_filter,
    factor_degrees,
    good_primes,
    is_good_prime,
    parity_evidence,
    subset_sum_closure,
)
from glpgalois.polys import parse_poly, poly_from_coeffs

from oracles import low_degree_factor_degrees, trial_division_is_prime


class TestGoodPrime:
    def test_examples(self):
        f = parse_poly("1,0,1")
        assert not is_good_prime(f, 2)  # disc = -4
        assert is_good_prime(f, 3)
        assert not is_good_prime(parse_poly("2,-4,1"), 2)  # disc = 8

    def test_denominator_and_leading(self):
        assert not is_good_prime(parse_poly("1/3,0,1"), 3)
        assert not is_good_prime(parse_poly("1,0,3"), 3)

    def test_good_primes_stream(self):
        assert list(islice(good_primes(parse_poly("1,0,1")), 4)) == [3, 5, 7, 11]


class TestFactorDegrees:
    def test_examples(self):
        assert factor_degrees(parse_poly("1,0,1"), 5).degrees == (1, 1)
        assert factor_degrees(parse_poly("1,0,1"), 3).degrees == (2,)
        assert factor_degrees(parse_poly("-2,0,0,1"), 7).degrees == (3,)

    def test_bad_prime_rejected(self):
        with pytest.raises(BadPrimeError):
            factor_degrees(parse_poly("1,0,1"), 2)

    def test_low_degree_oracle(self):
        rng = random.Random(61)
        primes = [p for p in range(3, 100) if trial_division_is_prime(p)]
        done = 0
        while done < 150:
            deg = rng.randint(1, 3)
            coeffs = [rng.randint(-30, 30) for _ in range(deg + 1)]
            f = poly_from_coeffs(coeffs)
            if f.degree != deg:
                continue
            p = rng.choice(primes)
            if not is_good_prime(f, p):
                continue
            expected = tuple(sorted(low_degree_factor_degrees([int(c) for c in f.coeffs], p)))
            assert factor_degrees(f, p).degrees == expected
            done += 1

    def test_degree_sum_random(self):
        # reconstruction is asserted inside factor_degrees on every call
        rng = random.Random(67)
        done = 0
        while done < 100:
            f = poly_from_coeffs([rng.randint(-50, 50) for _ in range(rng.randint(3, 10))])
            if f.degree < 2:
                continue
            p = rng.choice([101, 103, 107, 109, 113])
            if not is_good_prime(f, p):
                continue
            ct = factor_degrees(f, p)
            assert sum(ct.degrees) == f.degree
            done += 1

    def test_chebotarev_pattern_x2_plus_1(self):
        f = parse_poly("1,0,1")
        for p in range(3, 200):
            if not trial_division_is_prime(p):
                continue
            degrees = factor_degrees(f, p).degrees
            assert degrees == ((1, 1) if p % 4 == 1 else (2,))


class TestDegreeSetFilter:
    def test_irreducible_quadratic(self):
        assert degree_set_filter(parse_poly("1,0,1"), [3]) == {0, 2}

    def test_split_quadratic(self):
        assert degree_set_filter(parse_poly("-1,0,1"), [5]) == {0, 1, 2}

    def test_cubic_intersection(self):
        f = parse_poly("-2,0,0,1")
        assert degree_set_filter(f, [5]) == {0, 1, 2, 3}  # one root mod 5
        assert degree_set_filter(f, [7, 5]) == {0, 3}

    def test_subset_sum_closure(self):
        assert subset_sum_closure((1, 2)) == {0, 1, 2, 3}
        assert subset_sum_closure((3,)) == {0, 3}


class TestParity:
    def test_examples(self):
        assert parity_evidence([CycleType((2,), 3)]) == CONTAINS_ODD
        assert parity_evidence([CycleType((1, 1, 1), 5)]) == ALL_EVEN
        assert parity_evidence([CycleType((3,), 5), CycleType((1, 1, 1), 7)]) == ALL_EVEN

    def test_cycle_type_parity(self):
        assert not CycleType((2,), 3).is_even
        assert CycleType((3,), 7).is_even
        assert CycleType((1, 2, 4), 11).is_even  # (7 - 3) even
