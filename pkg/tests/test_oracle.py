import pytest

from confstab.oracle import c2_oracle, rp_homology


def test_examples():
    assert c2_oracle(4, 3) == {0: 1, 3: 1}
    assert c2_oracle(5, 3) == {0: 1}
    assert c2_oracle(3, "Q") == {0: 1}


def test_mod_two_sees_every_cell():
    assert rp_homology(4, 2) == {i: 1 for i in range(5)}


@pytest.mark.parametrize("d", range(0, 12))
@pytest.mark.parametrize("coeff", [3, 5, 7, "Q"])
def test_odd_and_rational(d, coeff):
    expected = {0: 1}
    if d % 2 == 1:
        expected[d] = 1
    assert rp_homology(d, coeff) == expected


def test_bad_input():
    with pytest.raises(ValueError):
        rp_homology(3, 4)
    with pytest.raises(ValueError):
        c2_oracle(1, 3)
