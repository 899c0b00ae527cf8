import json
import math

import numpy as np
import pytest

from coneh import (Circle, ExplicitSpectrum, InvalidArgument,
                   ResolutionInsufficient, RoundSphere, Spectrum,
                   eigenvalue_from_exponent, load_spectrum)

TWO_PI = 2.0 * math.pi


class TestSpectrumUpto:
    def test_round_sphere_2(self):
        # dims of harmonic polynomials in R^3 of degrees 0, 1, 2
        spec = RoundSphere(2).spectrum_upto(7.0)
        assert spec.entries == ((0.0, 1), (2.0, 3), (6.0, 5))

    def test_full_circle(self):
        spec = Circle(TWO_PI).spectrum_upto(4.5)
        assert spec.entries == ((0.0, 1), (1.0, 2), (4.0, 2))

    def test_half_circle(self):
        spec = Circle(math.pi).spectrum_upto(17.0)
        assert spec.entries == ((0.0, 1), (4.0, 2), (16.0, 2))

    def test_rejects_nonpositive_lambda_max(self):
        with pytest.raises(InvalidArgument):
            Circle(math.pi).spectrum_upto(0.0)


class TestCounting:
    def test_sphere(self):
        assert RoundSphere(2).counting(6.0) == 9

    def test_circle_constant_only(self):
        assert Circle(TWO_PI).counting(0.0) == 1

    def test_half_circle(self):
        assert Circle(math.pi).counting(5.0) == 3

    def test_left_excludes_eigenvalue(self):
        assert Circle(TWO_PI).counting_left(4.0) == 3
        assert RoundSphere(2).counting_left(6.0) == 4
        assert Circle(math.pi).counting_left(5.0) == 3

    def test_jump_equals_multiplicity(self):
        for X in (RoundSphere(2), RoundSphere(4), Circle(math.pi)):
            spec = X.spectrum_upto(60.0)
            for lam, mult in spec.entries:
                assert X.counting(lam) - X.counting_left(lam) == mult

    def test_circle_closed_form_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            L = float(rng.uniform(0.2, TWO_PI))
            lam = float(rng.uniform(1e-3, 1e4))
            X = Circle(L)
            # skip the measure-zero eigenvalue coincidences
            j = L * math.sqrt(lam) / TWO_PI
            if abs(j - round(j)) < 1e-9:
                continue
            assert X.counting(lam) == 1 + 2 * int(j)

    def test_sphere_matches_harmonic_polynomial_dim(self):
        from coneh import euclidean_hk
        for n in range(2, 7):
            X = RoundSphere(n - 1)
            for k in range(0, 51):
                assert X.counting(k * (k + n - 2)) == euclidean_hk(n, k)


class TestMeasure:
    def test_values(self):
        assert RoundSphere(2).measure() == pytest.approx(4.0 * math.pi, rel=1e-15)
        assert Circle(math.pi).measure() == math.pi
        assert RoundSphere(1).measure() == pytest.approx(TWO_PI, rel=1e-15)


class TestResonances:
    def test_full_circle_set(self):
        rset = Circle(TWO_PI).resonant_set_upto(2.5)
        assert rset.exponents == (0.0, 1.0, 2.0)

    def test_sphere_set(self):
        rset = RoundSphere(2).resonant_set_upto(2.2)
        assert rset.exponents == (0.0, 1.0, 2.0)

    def test_half_circle_set(self):
        assert Circle(math.pi).resonant_set_upto(1.9).exponents == (0.0,)

    def test_members_map_back(self):
        X = RoundSphere(3)
        rset = X.resonant_set_upto(6.0)
        spec = X.spectrum_upto(eigenvalue_from_exponent(6.0, X.ambient_dim))
        eigs = set(spec.eigenvalues)
        for beta in rset.exponents:
            assert eigenvalue_from_exponent(beta, X.ambient_dim) in eigs
        assert len(rset.exponents) == len(spec.entries)

    def test_is_resonant(self):
        X = Circle(TWO_PI)
        hit, beta, dist = X.is_resonant(2.0, 1e-9)
        assert hit and beta == 2.0
        miss, beta, dist = X.is_resonant(2.5, 1e-9)
        assert not miss and beta in (2.0, 3.0) and dist == 0.5

    def test_is_resonant_near_sphere_eigenvalue(self):
        hit, beta, _ = RoundSphere(2).is_resonant(0.999999, 1e-3)
        assert hit and beta == 1.0


class TestSpectrumType:
    def test_rejects_unsorted(self):
        with pytest.raises(InvalidArgument, match="strictly increasing"):
            Spectrum(2, ((0.0, 1), (4.0, 2), (1.0, 2)), 10.0)

    def test_rejects_missing_zero(self):
        with pytest.raises(InvalidArgument, match="must be 0"):
            Spectrum(2, ((1.0, 1),), 10.0)

    def test_rejects_nonsimple_zero(self):
        with pytest.raises(InvalidArgument, match="simple"):
            Spectrum(2, ((0.0, 2), (1.0, 2)), 10.0)

    def test_rejects_entry_beyond_bound(self):
        with pytest.raises(InvalidArgument, match="truncation"):
            Spectrum(2, ((0.0, 1), (11.0, 2)), 10.0)


class TestExplicitSpectrum:
    def test_counting_and_bound(self):
        X = ExplicitSpectrum(
            Spectrum(3, ((0.0, 1), (2.0, 3), (6.0, 5)), 10.0), 4.0 * math.pi)
        assert X.counting(6.0) == 9
        assert X.counting_left(6.0) == 4
        assert X.measure() == 4.0 * math.pi
        with pytest.raises(ResolutionInsufficient) as err:
            X.counting(11.0)
        assert err.value.certified_bound == 10.0

    def test_rejects_nonpositive_measure(self):
        with pytest.raises(InvalidArgument):
            ExplicitSpectrum(Spectrum(2, ((0.0, 1),), 1.0), 0.0)


class TestJsonInterchange:
    DOC = {"ambient_dim": 2, "measure": math.pi,
           "entries": [{"lambda": 0.0, "mult": 1}, {"lambda": 4.0, "mult": 2}],
           "truncation_bound": 10.0}

    def test_round_trip(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(self.DOC))
        X = load_spectrum(str(path))
        assert X.counting(5.0) == 3
        assert X.spectrum.to_json(measure=X.measure()) == self.DOC

    def test_rejects_bad_entry_with_index(self, tmp_path):
        doc = dict(self.DOC)
        doc["entries"] = [{"lambda": 0.0, "mult": 1}, {"lambda": 4.0}]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(InvalidArgument, match="entry 1"):
            load_spectrum(str(path))

    def test_rejects_unsorted_with_location(self, tmp_path):
        doc = dict(self.DOC)
        doc["entries"] = [{"lambda": 0.0, "mult": 1},
                          {"lambda": 4.0, "mult": 2},
                          {"lambda": 1.0, "mult": 2}]
        path = tmp_path / "unsorted.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(InvalidArgument, match=r"unsorted.json.*entry 2"):
            load_spectrum(str(path))

    def test_rejects_broken_json_with_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\n  \"ambient_dim\": 2,\n  oops\n}")
        with pytest.raises(InvalidArgument, match=r"broken.json:3"):
            load_spectrum(str(path))


class TestCircleBounds:
    def test_rejects_overlong_circle(self):
        with pytest.raises(InvalidArgument):
            Circle(TWO_PI + 0.1)

    def test_rejects_nonpositive_length(self):
        with pytest.raises(InvalidArgument):
            Circle(0.0)
