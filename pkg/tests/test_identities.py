"""Tests for the identity checks, the stable outer k-sum, and the suite runner."""

import math

import pytest

from qaw.context import DomainError, QContext
from qaw.identities import (
    AtakishiyevParams,
    AWParams,
    GeneratingParams,
    ReversalParams,
    check_askey_wilson,
    check_atakishiyev,
    check_fractional_aw,
    check_fractional_generating,
    check_lemma_three_term,
    check_reversal_aw,
    frac_prefactor,
    ksum,
    run_check,
    run_suite,
)
from qaw.suite import default_suite, expand_suite


class TestKSumOracle:
    def test_against_multiprecision_oracle(self):
        """The stable Taylor-kernel route versus a direct multiprecision sum.

        The direct double-precision sum of the terminating series with
        numerator q^-k at argument q loses all digits past k of about 6
        (intermediate terms reach q^{-k(k+1)/2}); the oracle therefore runs
        in adaptive multiprecision, with the working precision growing
        quadratically in k.
        """
        mp = pytest.importorskip("mpmath")
        # small numerator parameters keep the outer terms decaying fast
        # (ratio ~ (x/a) * max numerator magnitude), so the oracle's k range
        # stays short enough for quadratically growing working precision
        q, a, x, mu = 0.5, 0.15, 0.35, 1.5
        numer = [0.1, 0.05, 0.08]
        denom = [0.25, 0.12, 0.18]
        ctx = QContext(q=q)
        got = ksum(x, a, mu, numer, denom, ctx)

        qm = mp.mpf(q)

        def poch(c, n):
            p = mp.mpf(1)
            for j in range(n):
                p *= 1 - c * qm**j
            return p

        def poch_inf(c):
            p = mp.mpf(1)
            term = mp.mpmathify(c)
            while abs(term) > mp.mpf(10) ** (-mp.mp.dps - 5):
                p *= 1 - term
                term *= qm
            return p

        def poch_frac(c, alpha):
            return poch_inf(c) / poch_inf(c * qm**alpha)

        total = mp.mpf(0)
        for k in range(40):
            mp.mp.dps = 40 + int(k * (k + 1) / 2 * math.log10(1.0 / q))
            phi = mp.mpf(0)
            term = mp.mpf(1)
            for n in range(k + 1):
                phi += term
                ratio = (1 - qm ** (n - k)) * qm / (1 - qm ** (n + 1))
                for p in numer:
                    ratio *= 1 - p * qm**n
                for p in denom:
                    ratio /= 1 - p * qm**n
                term *= ratio
            coef = (
                mp.mpf(x) ** (mu + k)
                * poch_frac(mp.mpf(a) / x, mu + k)
                / (mp.mpf(a) ** k * poch_frac(qm, mu + k))
            )
            total += coef * phi
        mp.mp.dps = 40
        assert abs(got - complex(total)) < 1e-12 * abs(complex(total))

    def test_degenerate_collapse(self):
        # with no series parameters only the k=0 term survives and the sum
        # equals the bare fractional prefactor
        ctx = QContext(q=0.5)
        got = ksum(0.6, 0.2, 1.5, [], [], ctx)
        assert got == pytest.approx(frac_prefactor(0.6, 0.2, 1.5, ctx), rel=1e-13)


SAMPLE_GEN = GeneratingParams(
    q=0.5, a=0.2, x=0.6, mu=1.5, b=0.3, s=0.25, t=0.15, u=0.1, r=0.4, z=0.2
)


class TestLemmaAndGenerating:
    def test_lemma_residual_small(self):
        report = check_lemma_three_term(SAMPLE_GEN)
        assert report.passed and report.rel_err < 1e-12

    def test_lemma_degenerate_s_equals_u(self):
        p = GeneratingParams(
            q=0.5, a=0.2, x=0.6, mu=1.0, b=0.3, s=0.25, t=0.15, u=0.25, r=0.4, z=0.2
        )
        report = check_lemma_three_term(p)
        assert abs(report.lhs) < 1e-12 and abs(report.rhs) < 1e-12

    def test_generating_sample_point(self):
        report = check_fractional_generating(SAMPLE_GEN)
        assert report.passed and report.rel_err < 1e-8

    def test_invalid_params_raise(self):
        p = GeneratingParams(q=0.5, a=0.7, x=0.6, mu=1.5)  # a >= x
        with pytest.raises(DomainError):
            check_fractional_generating(p)


class TestAskeyWilson:
    def test_sample_point(self):
        report = check_askey_wilson(AWParams(q=0.5, a=0.3, b=0.2, c=0.1, d=0.4))
        assert report.passed and report.rel_err < 1e-8

    def test_permutation_invariance(self):
        r1 = check_askey_wilson(AWParams(q=0.5, a=0.3, b=0.2, c=0.1, d=0.4))
        r2 = check_askey_wilson(AWParams(q=0.5, a=0.2, b=0.3, c=0.1, d=0.4))
        assert r1.lhs == pytest.approx(r2.lhs, rel=1e-12)
        assert r1.rhs == pytest.approx(r2.rhs, rel=1e-12)

    def test_magnitude_invariant_violation(self):
        with pytest.raises(DomainError):
            check_askey_wilson(AWParams(q=0.5, a=1.2))

    def test_fractional_sample_point(self):
        report = check_fractional_aw(
            AWParams(q=0.5, a=0.2, b=0.3, c=0.1, d=0.15, x=0.6, mu=1.5)
        )
        assert report.passed and report.rel_err < 1e-6
        # conjugate symmetry keeps the quadrature value essentially real
        assert abs(report.lhs.imag) <= 10.0 * report.lhs_diag["est_error"]


class TestRealLineFamilies:
    def test_reversal_sample_point(self):
        report = check_reversal_aw(ReversalParams(q=0.5, a=0.2, b=0.1, c=0.15, d=0.1))
        assert report.passed and report.rel_err < 1e-6

    def test_atakishiyev_sample_point(self):
        report = check_atakishiyev(
            AtakishiyevParams(alpha_g=1.0, a=0.1, b=0.05, c=0.08, d=0.02)
        )
        assert report.passed and report.rel_err < 1e-6

    def test_atakishiyev_permutation_invariance(self):
        r1 = check_atakishiyev(AtakishiyevParams(alpha_g=1.0, a=0.1, b=0.05))
        r2 = check_atakishiyev(AtakishiyevParams(alpha_g=1.0, a=0.05, b=0.1))
        assert r1.lhs == pytest.approx(r2.lhs, rel=1e-12)
        assert r1.rhs == pytest.approx(r2.rhs, rel=1e-12)

    def test_atakishiyev_base_coupling(self):
        p = AtakishiyevParams(alpha_g=0.8)
        assert p.q == pytest.approx(math.exp(-2 * 0.64))


class TestReportSemantics:
    def test_residual_fields_consistent(self):
        r = check_askey_wilson(AWParams(q=0.5, a=0.3, b=0.2, c=0.1, d=0.4))
        scale = max(abs(r.lhs), abs(r.rhs), 1e-12)
        assert r.rel_err == pytest.approx(r.abs_err / scale)

    def test_tolerance_only_changes_passed(self):
        p = AWParams(q=0.5, a=0.3, b=0.2, c=0.1, d=0.4)
        loose = check_askey_wilson(p, tol=1e-6)
        absurd = check_askey_wilson(p, tol=1e-30)
        assert loose.lhs == absurd.lhs and loose.rhs == absurd.rhs
        assert loose.passed and not absurd.passed

    def test_residual_invariant_under_tighter_context(self):
        p = SAMPLE_GEN
        default = check_fractional_generating(p)
        tight = check_fractional_generating(
            p, ctx=QContext(q=p.q, eps_term=1e-16, eps_factor=1e-18)
        )
        assert abs(default.lhs - tight.lhs) < 1e-10
        assert abs(default.rhs - tight.rhs) < 1e-10


class TestSuiteRunner:
    def test_empty_suite(self):
        assert run_suite([]) == []

    def test_three_trivial_checks(self):
        entry = {
            "identity": "askey-wilson",
            "params": {"q": 0.5, "a": 0.3, "b": 0.2, "c": 0.1, "d": 0.4},
        }
        outcomes = run_suite([entry] * 3)
        assert len(outcomes) == 3
        assert all(oc.status == "passed" for oc in outcomes)

    def test_domain_violation_becomes_skipped(self):
        entry = {"identity": "askey-wilson", "params": {"q": 0.5, "a": 1.2}}
        (oc,) = run_suite([entry])
        assert oc.status == "skipped" and "1" in oc.reason

    def test_unknown_identity_rejected(self):
        with pytest.raises(KeyError):
            run_check("no-such-identity", {})


class TestSuiteSpec:
    def test_expansion_deterministic(self):
        spec = default_suite()
        assert expand_suite(spec) == expand_suite(spec)

    def test_seed_required(self):
        with pytest.raises(ValueError):
            expand_suite({"checks": []})

    def test_unknown_identity_in_spec(self):
        with pytest.raises(KeyError):
            expand_suite({"seed": 1, "checks": [{"identity": "bogus"}]})

    def test_draw_count_validated(self):
        with pytest.raises(ValueError):
            expand_suite(
                {"seed": 1, "checks": [{"identity": "askey-wilson", "draws": 0}]}
            )

    def test_range_draws_inside_bounds(self):
        spec = {
            "seed": 5,
            "checks": [
                {
                    "identity": "askey-wilson",
                    "params": {"q": [0.3, 0.7], "a": 0.1},
                    "draws": 4,
                }
            ],
        }
        entries = expand_suite(spec)
        assert len(entries) == 4
        for e in entries:
            assert 0.3 <= e["params"]["q"] <= 0.7 and e["params"]["a"] == 0.1
