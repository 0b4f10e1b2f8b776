import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercatalan import bijections as bj
from supercatalan.errors import DomainError
from supercatalan.paths import DOWN, UP, FamilySpec, LatticePath, enumerate_family, parse_path, stats

P = parse_path


def family(spec):
    return list(enumerate_family(spec))


class TestExamples:
    def test_psi(self):
        assert bj.psi(P("uud"), 2, 1) == P("uuu")
        assert bj.psi_inv(P("uuu"), 2, 1) == P("uud")

    def test_phi(self):
        assert bj.phi(P("udu"), 2, 1) == P("udud")
        assert bj.phi(P("duu"), 2, 1) == P("uudd")
        assert bj.phi_inv(P("uudd"), 2, 1) == P("duu")

    def test_phi_rejects_too_tall(self):
        # uud reaches height 2, so it is outside heightatmost(2, 1)
        with pytest.raises(DomainError):
            bj.phi(P("uud"), 2, 1)

    def test_f(self):
        assert bj.f(P("0111")) == P("0011")
        assert bj.f_inv(P("0011")) == P("0111")

    def test_f_rejects_catalan_input(self):
        with pytest.raises(DomainError):
            bj.f(P("0011"))

    def test_f_inv_rejects_low_path(self):
        with pytest.raises(DomainError):
            bj.f_inv(P("0101"))

    def test_g_case2_example(self):
        tr = bj.trace("g", P("01100111"))
        assert tr.case_taken == "Case2"
        assert bj.g_inv(tr.output) == P("01100111")

    def test_g_case1_example(self):
        tr = bj.trace("g", P("0111000111"))
        assert tr.case_taken == "Case1"
        assert bj.g_inv(tr.output) == P("0111000111")

    def test_g_case1_first_appears_at_five(self):
        for n, expected in ((4, {"Case2"}), (5, {"Case1", "Case2"})):
            cases = {bj.trace("g", p).case_taken for p in family(FamilySpec.ballot_star_star(n))}
            assert cases == expected


class TestWedge:
    def test_empty_wedge(self):
        assert bj.find_down_wedge(P("ududd"), 4, "before") == (4, 4)

    def test_wedge_before(self):
        # steps 2..5 are D U D U
        assert bj.find_down_wedge(P("ududu"), 5, "before") == (1, 5)

    def test_wedge_after(self):
        assert bj.find_down_wedge(P("ududuu"), 1, "after") == (1, 5)

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            bj.find_down_wedge(P("ud"), 0, "sideways")

    def test_anchor_out_of_range(self):
        with pytest.raises(IndexError):
            bj.find_down_wedge(P("ud"), 3)

    @given(st.lists(st.sampled_from([UP, DOWN]), max_size=14), st.data())
    def test_wedge_shape(self, steps, data):
        p = LatticePath(tuple(steps))
        anchor = data.draw(st.integers(0, len(p)))
        for direction in ("before", "after"):
            a, b = bj.find_down_wedge(p, anchor, direction)
            assert (b - a) % 2 == 0
            assert p.levels[a] == p.levels[b]
            assert all(p.steps[i] == (DOWN if (i - a) % 2 == 0 else UP) for i in range(a, b))


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_exhaustive(n):
    for r in range(1, n + 1):
        dom = family(FamilySpec.height_above(n, r))
        images = [bj.psi(p, n, r) for p in dom]
        target = family(FamilySpec.all_paths(n + r, n - r - 1)) if r < n else []
        assert sorted(images) == target
        for p, q in zip(dom, images):
            assert p.descent_set == q.descent_set
            assert bj.psi_inv(q, n, r) == p


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_exhaustive(n):
    for r in range(1, n + 1):
        dom = family(FamilySpec.height_at_most(n, r))
        images = [bj.phi(p, n, r) for p in dom]
        assert sorted(images) == family(FamilySpec.ballot(n, r))
        for p, q in zip(dom, images):
            assert p.maj - (n - r) == q.maj - q.des
            assert bj.phi_inv(q, n, r) == p


@pytest.mark.parametrize("n", range(2, 8))
def test_f_exhaustive(n):
    dom = family(FamilySpec.ballot_star(n))
    images = [bj.f(p) for p in dom]
    assert sorted(images) == [p for p in family(FamilySpec.catalan(n)) if p.height >= 2]
    for p, q in zip(dom, images):
        assert (p.maj, p.des) == (q.maj, q.des)
        assert bj.f_inv(q) == p


@pytest.mark.parametrize("n", range(2, 8))
def test_g_exhaustive(n):
    dom = family(FamilySpec.ballot_star_star(n))
    omega = set(family(FamilySpec.omega(n)))
    images = [bj.g(p) for p in dom]
    assert sorted(images) == [p for p in family(FamilySpec.catalan(n)) if p not in omega]
    for p, q in zip(dom, images):
        assert (p.maj - p.des) - (q.maj - q.des) == 2
        st_ = stats(q)
        assert st_.h_plus >= st_.h_minus + 3
        assert bj.g_inv(q) == p


@pytest.mark.parametrize("n", range(2, 8))
def test_g_case_deltas(n):
    for p in family(FamilySpec.ballot_star_star(n)):
        tr = bj.trace("g", p)
        if tr.case_taken == "Case2" and tr.landmarks["Y"] == 1:
            assert tr.stat_delta == (3, 1)
        else:
            assert tr.stat_delta == (2, 0)


class TestTraces:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_stat_delta_is_recomputed_difference(self, n):
        for name, spec in (("f", FamilySpec.ballot_star(n)), ("g", FamilySpec.ballot_star_star(n))):
            for p in family(spec):
                tr = bj.trace(name, p)
                assert tr.stat_delta == (p.maj - tr.output.maj, p.des - tr.output.des)

    def test_f_landmarks(self):
        for p in family(FamilySpec.ballot_star(5)):
            tr = bj.trace("f", p)
            assert tr.landmarks["Q"] == tr.landmarks["R"] + 1
            assert tr.output.levels[tr.landmarks["Q"]] == tr.output.height

    def test_g_landmarks_point_at_expected_levels(self):
        for p in family(FamilySpec.ballot_star_star(5)):
            tr = bj.trace("g", p)
            assert p.levels[tr.landmarks["N"]] == -1
            assert tr.output.levels[tr.landmarks["Q"]] == tr.output.height

    def test_split_landmarks(self):
        tr = bj.trace("f", P("0111"))
        ins, outs = tr.split_landmarks()
        assert ins == {"R": 1} and outs == {"Q": 2}

    def test_to_json(self):
        js = bj.trace("f", P("0111")).to_json()
        assert js == {
            "name": "f", "input": "0111", "output": "0011", "case": None,
            "landmarks": {"R": 1, "Q": 2}, "stat_delta": {"maj": 0, "des": 0},
        }

    def test_unknown_name(self):
        with pytest.raises(DomainError):
            bj.trace("zeta", P("01"))

    def test_missing_params(self):
        with pytest.raises(DomainError):
            bj.trace("psi", P("001"))


class TestDomainErrors:
    @pytest.mark.parametrize("name, text", [
        ("f", "0011"), ("f", "01"), ("f_inv", "0110"), ("g", "0111"),
        ("g_inv", "0101"), ("g_inv", "011"),
    ])
    def test_rejected(self, name, text):
        with pytest.raises(DomainError):
            bj.trace(name, P(text))

    def test_input_untouched(self):
        p = P("0011")
        with pytest.raises(DomainError):
            bj.f(p)
        assert str(p) == "0011"

    def test_psi_inv_needs_r_below_n(self):
        with pytest.raises(DomainError):
            bj.psi_inv(P("000"), 2, 2)


class TestInferParams:
    @pytest.mark.parametrize("name, text, expected", [
        ("psi", "001", (2, 1)),
        ("phi", "010", (2, 1)),
        ("psi_inv", "000", (2, 1)),
        ("phi_inv", "0111", (2, 2)),
        ("f", "0111", (None, None)),
    ])
    def test_examples(self, name, text, expected):
        assert bj.infer_params(name, P(text)) == expected

    def test_inferred_params_round_trip(self):
        for n in range(1, 6):
            for r in range(1, n + 1):
                for p in family(FamilySpec.height_above(n, r)):
                    assert bj.infer_params("psi", p) == (n, r)
                for p in family(FamilySpec.ballot(n, r)):
                    assert bj.infer_params("phi_inv", p) == (n, r)

    def test_bad_shape(self):
        with pytest.raises(DomainError):
            bj.infer_params("phi_inv", P("011"))
