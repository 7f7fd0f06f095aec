"""Continuity bound evaluators: presets, closed forms, engine identity."""
import math

import pytest

from entrobound.bounds import (
    BoundDescriptor,
    PRESETS,
    bound_curve,
    bound_from_envelopes,
    continuity_bound,
    continuity_bound_finite,
    continuity_bound_oscillator,
)
from entrobound.entropy import binary_entropy, thermal_entropy
from entrobound.errors import ValidationError
from entrobound.gibbs import SpectrumModel, max_entropy_with_tail

SINGLE_MODE = SpectrumModel.oscillator((1.0,), truncation=4096)
TWO_LEVEL = SpectrumModel.explicit((0.0, 1.0))


class TestPresets:
    @pytest.mark.parametrize(
        "name,c_minus,c_plus,a,b",
        [
            ("entropy", 0.0, 1.0, 0.0, 1.0),
            ("cond-entropy", 1.0, 1.0, 0.0, 1.0),
            ("mutual-info", 0.0, 2.0, 1.0, 1.0),
            ("ree", 0.0, 1.0, 1.0, 0.0),
            ("channel-mi", 0.0, 2.0, 1.0, 1.0),
            ("holevo", 0.0, 2.0, 1.0, 1.0),
        ],
    )
    def test_coefficient_table_frozen(self, name, c_minus, c_plus, a, b):
        d = PRESETS[name]
        assert d.name == name
        assert d.c_minus == c_minus
        assert d.c_plus == c_plus
        assert d.a_coeff == a
        assert d.b_coeff == b

    def test_g_multiplier_consistent_with_slack_sum(self):
        for d in PRESETS.values():
            assert d.g_multiplier == d.a_coeff + d.b_coeff

    def test_rejects_negative_coefficient(self):
        with pytest.raises(ValidationError):
            BoundDescriptor("bad", -0.5, 1.0, 0.0, 1.0, 1.0)

    def test_unknown_preset_lists_alternatives(self):
        with pytest.raises(ValidationError, match="entropy"):
            continuity_bound_finite("no-such-preset", 4, 0.1)


class TestContinuityBound:
    def test_oscillator_closed_form_frozen(self):
        # eps = 0.08, E = 1.5, unit mode: sqrt(2 eps) = 0.4,
        # cap = ln(E/eps + 1/2) + 1 = ln 19.25 + 1, additive = g(0.4).
        r = continuity_bound_oscillator("entropy", (1.0,), 0.08, 1.5)
        assert r.main_term == pytest.approx(1.5830044242935175, abs=1e-9)
        assert r.additive_term == pytest.approx(0.8375774240193601, abs=1e-9)
        assert r.value == pytest.approx(2.4205818483128776, abs=1e-9)
        assert r.f_argument == pytest.approx(18.75)

    def test_spectrum_backed_matches_exact_unit_mode(self):
        # F(E) = g(E - 1/2) for the unit oscillator, so the main term is
        # sqrt(2 eps) g(E/eps - 1/2) exactly.
        r = continuity_bound("entropy", SINGLE_MODE, 0.08, 1.5)
        assert r.main_term == pytest.approx(0.4 * thermal_entropy(18.25), abs=1e-9)
        assert r.f_tail < 1e-12

    def test_spectrum_never_exceeds_oscillator_cap(self):
        for eps in (0.01, 0.05, 0.1, 0.25, 0.5):
            exact = continuity_bound("entropy", SINGLE_MODE, eps, 2.0)
            cap = continuity_bound_oscillator("entropy", (1.0,), eps, 2.0)
            assert exact.value <= cap.value + 1e-12

    def test_value_is_sum_of_terms(self):
        r = continuity_bound("mutual-info", TWO_LEVEL, 0.2, 0.3)
        assert r.value == r.main_term + r.additive_term
        assert r.main_term == pytest.approx(2.0 * math.sqrt(0.4) * r.f_value, rel=1e-12)
        assert r.additive_term == pytest.approx(2.0 * thermal_entropy(math.sqrt(0.4)), rel=1e-12)

    def test_epsilon_zero_returns_zero(self):
        r = continuity_bound("entropy", TWO_LEVEL, 0.0, 1.0)
        assert r.value == 0.0
        assert r.main_term == 0.0
        assert r.additive_term == 0.0
        assert r.epsilon_effective == 0.0

    def test_pure_variant_equals_mixed_at_half_eps_squared(self):
        for eps in (0.04, 0.2, 0.5):
            pure = continuity_bound("entropy", SINGLE_MODE, eps, 1.5, pure=True)
            mixed = continuity_bound("entropy", SINGLE_MODE, 0.5 * eps * eps, 1.5)
            assert pure.value == pytest.approx(mixed.value, rel=1e-12)
            assert pure.epsilon_effective == pytest.approx(0.5 * eps * eps)
            assert pure.pure is True

    def test_rejects_epsilon_outside_range(self):
        with pytest.raises(ValidationError):
            continuity_bound("entropy", TWO_LEVEL, 0.6, 1.0)
        with pytest.raises(ValidationError):
            continuity_bound("entropy", TWO_LEVEL, -0.1, 1.0)

    def test_accepts_custom_descriptor(self):
        desc = BoundDescriptor("custom", 0.5, 0.5, 0.0, 0.0, 0.0)
        r = continuity_bound(desc, TWO_LEVEL, 0.2, 0.4)
        assert r.preset == "custom"
        assert r.additive_term == 0.0


class TestFiniteBound:
    def test_dimension_example_frozen(self):
        # dim 8 at eps = 1: main = ln 8, additive = g(1) = 2 ln 2.
        r = continuity_bound_finite("entropy", 8, 1.0)
        assert r.main_term == pytest.approx(3 * math.log(2), abs=1e-12)
        assert r.additive_term == pytest.approx(2 * math.log(2), abs=1e-12)

    def test_allows_epsilon_up_to_one(self):
        assert continuity_bound_finite("entropy", 4, 1.0).value > 0
        with pytest.raises(ValidationError):
            continuity_bound_finite("entropy", 4, 1.2)

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValidationError):
            continuity_bound_finite("entropy", 0, 0.1)

    def test_pure_variant(self):
        pure = continuity_bound_finite("holevo", 6, 0.4, pure=True)
        mixed = continuity_bound_finite("holevo", 6, 0.08)
        assert pure.value == pytest.approx(mixed.value, rel=1e-12)

    def test_trivial_dimension_keeps_additive_term(self):
        r = continuity_bound_finite("entropy", 1, 0.3)
        assert r.main_term == 0.0
        assert r.additive_term == pytest.approx(thermal_entropy(0.3), rel=1e-12)


class TestEnvelopeEngine:
    def test_mixing_slack_identity(self):
        # (1 + x) h2(x / (1 + x)) = g(x) links the engine form to the
        # preset form.
        for x in (0.01, 0.4, 1.0, 3.0):
            lhs = (1 + x) * binary_entropy(x / (1 + x))
            assert lhs == pytest.approx(thermal_entropy(x), rel=1e-12)

    def test_matches_entropy_preset(self):
        def envelope(arg):
            return max_entropy_with_tail(SINGLE_MODE, arg)[0]

        for eps in (0.01, 0.08, 0.3, 0.5):
            via = bound_from_envelopes(
                eps,
                1.5,
                growth_plus=envelope,
                slack_lower=lambda p: 0.0,
                slack_upper=binary_entropy,
            )
            direct = continuity_bound("entropy", SINGLE_MODE, eps, 1.5)
            assert via == pytest.approx(direct.value, rel=1e-12)

    def test_matches_mutual_info_preset(self):
        def envelope(arg):
            return max_entropy_with_tail(SINGLE_MODE, arg)[0]

        for eps in (0.05, 0.25):
            via = bound_from_envelopes(eps, 1.5, growth=envelope)
            direct = continuity_bound("mutual-info", SINGLE_MODE, eps, 1.5)
            assert via == pytest.approx(direct.value, rel=1e-12)

    def test_rejects_ambiguous_growth_arguments(self):
        with pytest.raises(ValidationError):
            bound_from_envelopes(0.1, 1.0)
        with pytest.raises(ValidationError):
            bound_from_envelopes(0.1, 1.0, growth=lambda a: 1.0, growth_plus=lambda a: 1.0)


class TestBoundCurve:
    def test_envelope_is_running_maximum(self):
        # A descriptor with no additive slack on a two-level spectrum at
        # tiny energy is genuinely non-monotone: the F term saturates at
        # ln 2 while sqrt(2 eps) keeps shrinking.
        desc = BoundDescriptor("main-only", 0.0, 1.0, 0.0, 0.0, 0.0)
        results, envelope, monotone = bound_curve(
            desc, TWO_LEVEL, [0.5, 0.005, 0.125, 0.02], 0.005
        )
        assert monotone is False
        values = [r.value for r in results]
        assert values[1] > values[2] > values[3]
        running = []
        best = 0.0
        for v in values:
            best = max(best, v)
            running.append(best)
        assert envelope == running

    def test_preset_curve_is_monotone_here(self):
        results, envelope, monotone = bound_curve(
            "entropy", SINGLE_MODE, [0.01, 0.05, 0.1, 0.25, 0.5], 2.0
        )
        assert monotone is True
        assert envelope == [r.value for r in results]
        assert [r.epsilon for r in results] == sorted(r.epsilon for r in results)
