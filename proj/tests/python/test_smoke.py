"""Smoke tests for the python module: the main operations, round trips, and
pinned values, hitting the same numbers the C++ suites verify in depth."""

import json

import pytest

import arbor


def test_tree_labeling_round_trip():
    assert arbor.leaf_index([1, 2], d=3, n=2) == 5
    assert arbor.path_of_index(5, d=3, n=2) == [1, 2]
    for i in range(27):
        assert arbor.leaf_index(arbor.path_of_index(i, 3, 3), 3, 3) == i
    assert arbor.same_subtree(2, 5, 1, 3, 2)
    assert not arbor.same_subtree(4, 5, 2, 3, 2)


def test_automorphism_algebra():
    a = arbor.Automorphism.random(3, 3, seed=1)
    b = arbor.Automorphism.random(3, 3, seed=2)
    c = a * b
    for leaf in range(27):
        assert c.act(leaf) == a.act(b.act(leaf))
    assert (a * a.inverse()).is_identity()
    assert arbor.Automorphism.from_json(a.to_json()) == a


def test_serialization_is_bit_exact():
    text = (
        '{"perm":[1,0],"children":[{"perm":[],"children":[]},'
        '{"perm":[],"children":[]}]}'
    )
    assert arbor.Automorphism.from_json(text).to_json() == text


def test_sign_identities():
    for seed in range(50):
        a = arbor.Automorphism.random(3, 4, seed=seed)
        assert arbor.sign(a) == (1 if _parity(a.leaf_images()) else -1)
        assert arbor.sign_e(a, 3, 1) == arbor.sign_at(a, 3)
        assert arbor.sign_f(a, 3, 1) == arbor.sign_at(a, 3) * arbor.sign_at(a, 1)
        b = arbor.Automorphism.random(2, 4, seed=seed)
        assert arbor.sign_e(b, 3, 1) == arbor.sign_at(b, 3) * arbor.sign_at(b, 1)
        assert arbor.sign_f(b, 3, 1) == arbor.sign_at(b, 3)


def _parity(images):
    seen = [False] * len(images)
    transpositions = 0
    for i in range(len(images)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


def test_orders_and_membership():
    assert arbor.order("E:d=3,m=2", 2) == 648
    assert arbor.order("E:d=3,m=2", 3) == 816293376
    assert arbor.order("F:d=2,m=2,mp=1", 2) == 4
    members = arbor.enumerate_members("E:d=3,m=2", 2)
    assert len(members) == 648
    assert all(arbor.is_member(a, "E:d=3,m=2") for a in members[:20])
    sample = arbor.random_member("E:d=3,m=2", 4, seed=9)
    assert arbor.is_member(sample, "E:d=3,m=2")
    assert arbor.leaf_orbit("E:d=3,m=2", 2, 0) == list(range(9))


def test_structure():
    series = arbor.chief_series("E:d=3,m=2", 2)
    assert series["orders"] == [1, 27, 108, 324, 648]
    assert series["unique"]
    assert series["factors"] == ["C3^3", "C2^2", "C3", "C2"]
    assert arbor.abelian_invariants("Aut:d=3", 2) == [2, 2]
    assert arbor.rank("E:d=3,m=2", 2) == 2

    result, moves = arbor.normalize_tuple([1, -1, -1])
    assert result == [-1, -1, 1]
    assert moves == [{"op": "rotate3", "index": 0}]

    a = arbor.Automorphism.random(3, 3, seed=5)
    tau = arbor.inverting_conjugator(a)
    assert tau * a * tau.inverse() == a.inverse()


def test_dynamics():
    cubic = "1,0,-3,2"
    orbit = arbor.detect_pcf(cubic)
    assert (orbit["L"], orbit["O"]) == (0, 1)
    assert orbit["critical"] == ["0", "1"]

    spec = arbor.classify(cubic)
    assert (spec["family"], spec["d"], spec["m"], spec["mp"]) == ("E", 3, 2, None)
    assert spec["flags"] == []

    report = arbor.discriminant(cubic, "3", 1)
    assert report["value"] == "-648"
    assert not report["is_square"]
    level2 = arbor.discriminant(cubic, "3", 2)
    assert level2["value"] == str(2**36 * 3**22)
    assert level2["is_square"]

    assert arbor.resultant("-1,1", "-2,1") == "1"
    assert arbor.square_discriminant_level(cubic) == (2, 0)
    assert arbor.classify("-2,0,1")["m"] == 3


def test_padic():
    assert arbor.valuation("12/5", 2) == 2
    assert arbor.valuation("0", 3) is None
    assert arbor.newton_polygon("-2,0,-3,2", 2) == [("-1/2", 2), ("1", 1)]
    assert arbor.eisenstein_after_shift("-3,0,3,2", 3)
    cert = arbor.irreducibility_certificate("1,0,-3,2", "3", 1)
    assert cert == {"prime": 3, "shift": "1", "n": 1}
    assert arbor.irreducibility_certificate("1,0,-3,2", "-1", 1) is None
    cond = arbor.condition_check("3")
    assert cond["satisfied"] and cond["at3"] == "v3(alpha)=1"


def test_errors_are_typed():
    with pytest.raises(arbor.DomainError):
        arbor.order("E:d=1,m=2", 2)
    with pytest.raises(arbor.DomainError):
        arbor.classify("1,0,1")  # not post-critically finite
    with pytest.raises(arbor.DomainError):
        arbor.condition_check("1")


def test_verify_suite_passes():
    results = arbor.run_verify("padic")
    assert results and all(r["pass"] for r in results)
