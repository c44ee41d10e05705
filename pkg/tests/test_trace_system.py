"""Weighted block system: solver pins, enumeration oracle, extension fallback."""

import itertools

import pytest

from quadcert.errors import InvalidProfileError
from quadcert.gf import field_make
from quadcert.profile import binary_profile
from quadcert.quadric import in_small_diagonal, on_quadric
from quadcert.trace_system import (
    evaluate_system,
    lift_block_solution,
    solve_block_system,
    weights_mod_p,
)


def coeffs(sol):
    return tuple(e.coeffs[0] for e in sol.c)


def test_weights_pins():
    assert weights_mod_p(binary_profile(15), 3) == (2, 1, 2, 1)
    assert weights_mod_p(binary_profile(15), 5) == (3, 4, 2, 1)
    assert weights_mod_p(binary_profile(31), 31) == (16, 8, 4, 2, 1)


def test_weights_all_nonzero():
    # powers of two stay invertible in odd characteristic
    for n in (15, 31, 45, 77, 85):
        for p in (3, 5, 7, 11, 13):
            assert all(w != 0 for w in weights_mod_p(binary_profile(n), p))


def test_solve_pins():
    sol = solve_block_system(binary_profile(15), 3)
    assert sol.ctx.k == 1 and sol.ctx.p == 3
    assert coeffs(sol) == (1, 1, 0, 0)

    sol5 = solve_block_system(binary_profile(15), 5)
    assert coeffs(sol5) == (1, 0, 1, 0)


def test_solutions_verify_exactly():
    for n, p in [(15, 3), (15, 5), (45, 3), (45, 5), (31, 31), (85, 5)]:
        sol = solve_block_system(binary_profile(n), p)
        lin, quad = evaluate_system(sol)
        assert lin.is_zero() and quad.is_zero()
        assert any(not e.is_zero() for e in sol.c)
        assert sol.c[-1].is_zero()


def brute_first(p, weights):
    """Independent full scan over the candidate space, first digit fastest."""
    r = len(weights)
    for rev in itertools.product(range(p), repeat=r - 1):
        digits = rev[::-1]  # c_1 varies fastest
        if not any(digits):
            continue
        lin = sum(w * d for w, d in zip(weights, digits)) % p
        quad = sum(w * d * d for w, d in zip(weights, digits)) % p
        if lin == 0 and quad == 0:
            return digits + (0,)
    return None


@pytest.mark.parametrize(
    "n,p",
    [(15, 3), (15, 5), (45, 3), (45, 5), (51, 3), (85, 5), (105, 3), (341, 11)],
)
def test_solver_matches_brute_force(n, p):
    prof = binary_profile(n)
    expected = brute_first(p, weights_mod_p(prof, p))
    assert expected is not None
    assert coeffs(solve_block_system(prof, p)) == expected


def test_quadratic_extension_fallback():
    # 77 = 64 + 8 + 4 + 1: the base field scan comes up empty, the
    # degree 2 extension cannot (every base element is a square there)
    prof = binary_profile(77)
    assert brute_first(11, weights_mod_p(prof, 11)) is None
    sol = solve_block_system(prof, 11)
    assert sol.ctx.p == 11 and sol.ctx.k == 2
    lin, quad = evaluate_system(sol)
    assert lin.is_zero() and quad.is_zero()
    assert sol.c[-1].is_zero()


def test_fallback_second_case():
    prof = binary_profile(1100)
    assert brute_first(5, weights_mod_p(prof, 5)) is None
    sol = solve_block_system(prof, 5)
    assert sol.ctx.k == 2
    lin, quad = evaluate_system(sol)
    assert lin.is_zero() and quad.is_zero()


def test_invalid_profiles():
    with pytest.raises(InvalidProfileError):
        solve_block_system(binary_profile(12), 3)  # 12 = 8 + 4, two terms
    with pytest.raises(InvalidProfileError):
        solve_block_system(binary_profile(21), 3)  # three terms
    with pytest.raises(InvalidProfileError):
        solve_block_system(binary_profile(15), 7)  # 7 does not divide 15


def test_lift_pin():
    prof = binary_profile(15)
    sol = solve_block_system(prof, 3)
    lifted = lift_block_solution(prof, sol)
    assert [e.coeffs[0] for e in lifted.coords] == [1] * 12 + [0] * 3
    assert on_quadric(lifted)
    assert not in_small_diagonal(lifted)


def test_lift_block_structure():
    prof = binary_profile(45)
    sol = solve_block_system(prof, 5)
    lifted = lift_block_solution(prof, sol)
    assert lifted.n == 45
    pos = 0
    for size, c in zip(prof.block_sizes(), sol.c):
        assert all(x == c for x in lifted.coords[pos : pos + size])
        pos += size
    assert on_quadric(lifted)


def test_solution_to_json():
    doc = solve_block_system(binary_profile(15), 3).to_json()
    assert doc == {
        "n": 15,
        "exponents": [3, 2, 1, 0],
        "weights": [2, 1, 2, 1],
        "c": [[1], [1], [0], [0]],
        "field": {"p": 3, "k": 1, "modulus": [0, 1]},
    }
