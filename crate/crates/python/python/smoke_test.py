"""Smoke test for the varwreath extension module."""

import varwreath as vw


def main():
    b = vw.AbelianGroup("C_4 * C_2 * C_4")
    assert str(b) == str(vw.AbelianGroup("C_4^2 * C_2")), str(b)
    assert b.exponent == 4 and b.is_finite
    assert b == vw.AbelianGroup(str(b)) and hash(b) == hash(vw.AbelianGroup(str(b)))

    inf1 = vw.AbelianGroup("C_4^{aleph_0} * C_2")
    inf2 = vw.AbelianGroup("C_4^{aleph_0}")
    assert inf1.equivalent(inf2)
    assert vw.AbelianGroup("C_4 * C_2").divergence(vw.AbelianGroup("C_4"), 2) == (2, 1)

    a = vw.PassiveGroup("C_3")
    b = vw.AbelianGroup("C_3^2")
    params = vw.shield_params(b, 3)
    assert vw.shield_class(a, b) == 5, params
    assert len(vw.kp_series(b, 3)) == params.d + 1

    d = vw.decide(a, a, vw.AbelianGroup("C_9 * C_3"), vw.AbelianGroup("C_9 * C_3^2"))
    assert d.verdict == "unequal" and not d
    assert d.witness is not None and d.witness.p == 3, d

    same = vw.decide(vw.PassiveGroup("D4"), vw.PassiveGroup("Q8"), vw.AbelianGroup("C_2"), vw.AbelianGroup("C_2"))
    assert same.verdict == "equal" and same

    check = vw.verify_shield("C_3", "C_3")
    assert check.all_equal and check.order == 81 and check.oracle_class == 3, check

    try:
        vw.AbelianGroup("C_4 *")
    except vw.ParseError:
        pass
    else:
        raise AssertionError("expected ParseError")

    try:
        vw.verify_shield("C_3", "C_3^4")
    except vw.BudgetExceededError:
        pass
    else:
        raise AssertionError("expected BudgetExceededError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
