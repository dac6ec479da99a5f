import math

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import DegenerateInputError, DomainError, \
    PreconditionError
from oracle.strategies import pmfs
from source.distances import variational_distance
from source.mapping import DeterministicMap, approximation_bound, \
    build_mapping, check_mapping_bound, pushforward, tail_index
from source.serializers import MappingReportSerializer
from spectrum.pmf import Pmf
from spectrum.spectra import build_spectrum


FIVE_SYMBOLS = Pmf(('z1', 'z2', 'z3', 'z4', 'z5'),
                   (0.025, 0.075, 0.2, 0.3, 0.4))
COIN4 = Pmf(('a', 'b', 'c', 'd'), (0.25,) * 4)
TARGET2 = Pmf(('u', 'v'), (0.5, 0.5))


class DeterministicMapTests(SimpleTestCase):

    def test_unassigned_symbol_rejected(self):
        """Test a map must be total on its domain"""
        with self.assertRaises(DomainError):
            DeterministicMap(('a', 'b'), ('u',), {'a': 'u'})

    def test_image_outside_codomain_rejected(self):
        """Test every image lies in the codomain"""
        with self.assertRaises(DomainError):
            DeterministicMap(('a',), ('u',), {'a': 'w'})

    def test_call_outside_domain(self):
        """Test calling the map on an unknown symbol names it"""
        phi = DeterministicMap.from_pairs([('a', 'u')])

        with self.assertRaisesMessage(DomainError, "'q'"):
            phi('q')


class PushforwardTests(SimpleTestCase):

    def test_identity_map(self):
        """Test the identity map leaves the pmf unchanged"""
        phi = DeterministicMap.from_pairs(
            [(label, label) for label in FIVE_SYMBOLS.labels]
        )

        self.assertEqual(pushforward(phi, FIVE_SYMBOLS).as_dict(),
                         FIVE_SYMBOLS.as_dict())

    def test_constant_map(self):
        """Test a constant map gives a point mass"""
        phi = DeterministicMap.from_pairs(
            [(label, 'y') for label in FIVE_SYMBOLS.labels]
        )

        self.assertEqual(pushforward(phi, FIVE_SYMBOLS).as_dict(), {'y': 1.0})

    def test_symbol_outside_domain(self):
        """Test a pmf symbol the map does not know is reported"""
        phi = DeterministicMap.from_pairs([('a', 'u')])

        with self.assertRaisesMessage(DomainError, "'b'"):
            pushforward(phi, TARGET2.relabel({'u': 'a', 'v': 'b'}))


class BuildMappingTests(SimpleTestCase):

    def test_uniform_four_onto_two(self):
        """Test the interval alignment and the extension symbol"""
        phi = build_mapping(COIN4, TARGET2, 0.3, 1.21)

        self.assertEqual(
            phi.to_rows(), [('a', 'u'), ('b', 'u'), ('c', 'v'), ('d', 'v')]
        )
        self.assertEqual((phi.meta.i1, phi.meta.i2, phi.meta.j2), (3, 2, 2))
        self.assertEqual(pushforward(phi, COIN4).as_dict(),
                         {'u': 0.5, 'v': 0.5})

    def test_point_mass_target(self):
        """Test every coin symbol maps to a single target symbol"""
        phi = build_mapping(FIVE_SYMBOLS, Pmf.point_mass('y'), 0.3, 1.21)

        self.assertEqual(set(phi.assignment.values()), {'y'})

    def test_five_symbol_onto_uniform(self):
        """Test the strict tail inequality picks i1 = 3"""
        phi = build_mapping(FIVE_SYMBOLS, TARGET2, 0.3, 1.21)
        q = pushforward(phi, FIVE_SYMBOLS)

        self.assertEqual((phi.meta.i1, phi.meta.i2, phi.meta.j2), (3, 2, 2))
        self.assertEqual(phi('z5'), 'u')
        self.assertEqual(phi('z4'), 'u')
        self.assertEqual(phi('z3'), 'v')
        self.assertAlmostEqual(variational_distance(TARGET2, q), 0.4)

    def test_zero_mass_symbols_are_mapped(self):
        """Test symbols outside the support still get an image"""
        coin = Pmf(('a', 'b', 'z'), (0.5, 0.5, 0.0))

        phi = build_mapping(coin, TARGET2, 0.3, 1.21)

        self.assertEqual(phi('z'), 'v')

    def test_hypothesis_violated(self):
        """Test exp(-gamma) above eps is refused"""
        with self.assertRaises(PreconditionError):
            build_mapping(COIN4, TARGET2, 0.1, 0.5)

    def test_hypothesis_at_equality(self):
        """Test exp(-gamma) = eps is accepted"""
        phi = build_mapping(COIN4, TARGET2, 0.3, -math.log(0.3))

        self.assertEqual(phi.meta.eps, 0.3)

    def test_invalid_parameters(self):
        """Test eps and gamma domains"""
        with self.assertRaises(DomainError):
            build_mapping(COIN4, TARGET2, 1.0, 2.0)
        with self.assertRaises(DomainError):
            build_mapping(COIN4, TARGET2, 0.3, 0.0)

    def test_empty_target_support(self):
        """Test a target without listed mass is degenerate"""
        target = Pmf(('u',), (0.0,), tail_mass=1.0)

        with self.assertRaises(DegenerateInputError):
            build_mapping(COIN4, target, 0.3, 1.21)

    def test_tail_never_below_eps(self):
        """Test a truncated list whose tail stays at eps is refused"""
        coin = Pmf(('a', 'b'), (0.4, 0.3), tail_mass=0.3)

        with self.assertRaises(PreconditionError):
            build_mapping(coin, TARGET2, 0.3, 1.21)

    def test_tail_index(self):
        """Test the smallest j leaving a tail strictly below eps"""
        probs = build_spectrum(FIVE_SYMBOLS).masses

        self.assertEqual(tail_index(probs, 0.0, 0.3), 3)
        self.assertEqual(tail_index(probs, 0.0, 0.31), 2)
        self.assertEqual(tail_index(probs, 0.0, 1e-6), 5)

    @settings(deadline=None)
    @given(pmfs(max_size=12), pmfs(max_size=8, prefix='t'),
           st.sampled_from([0.05, 0.1, 0.3]), st.floats(0.0, 2.0))
    def test_alignment_is_monotone(self, coin, target, eps, u):
        """Test more probable coin symbols never map further down"""
        phi = build_mapping(coin, target, eps, -math.log(eps) + u)
        sx = build_spectrum(coin)
        y_rank = {label: k for k, label in enumerate(
            build_spectrum(target).labels
        )}

        ranks = [y_rank[phi(x)] for x in sx.labels[:phi.meta.i1]]
        self.assertEqual(ranks, sorted(ranks))
        self.assertEqual(ranks[-1] + 1, phi.meta.j2)


class CheckMappingBoundTests(SimpleTestCase):

    def test_coin_equals_target(self):
        """Test a coin equal to the target is reproduced exactly"""
        report = check_mapping_bound(FIVE_SYMBOLS, FIVE_SYMBOLS, 0.01, 4.7)

        self.assertEqual(report.d, 0.0)
        self.assertTrue(report.passed)

    def test_uniform_four_onto_two(self):
        """Test the bound with the constant log 2 gap"""
        report = check_mapping_bound(COIN4, TARGET2, 0.3, 1.21)

        self.assertEqual(report.d, 0.0)
        self.assertEqual(report.deficiency, 1.0)
        self.assertAlmostEqual(report.bound, 12.7)
        self.assertTrue(report.passed)

    def test_five_symbol_report(self):
        """Test the report serializes every field"""
        report = check_mapping_bound(FIVE_SYMBOLS, TARGET2, 0.3, 1.21)

        data = MappingReportSerializer(report).data

        self.assertAlmostEqual(data['d'], 0.4)
        self.assertAlmostEqual(data['deficiency'], 0.9)
        self.assertAlmostEqual(data['bound'], 11.7)
        self.assertIs(data['pass'], True)
        self.assertEqual((data['i1'], data['i2'], data['j2']), (3, 2, 2))

    def test_given_map_without_metadata(self):
        """Test a hand-made map is checked against the same bound"""
        phi = DeterministicMap.from_pairs(
            [(label, 'u') for label in COIN4.labels], ('u', 'v')
        )

        report = check_mapping_bound(COIN4, TARGET2, 0.3, 1.21, phi=phi)

        self.assertEqual(report.d, 1.0)
        self.assertIsNone(report.i1)

    def test_approximation_bound(self):
        """Test the bound is 9 eps + 10 mu"""
        self.assertAlmostEqual(approximation_bound(0.1, 0.05), 1.4)

    @settings(deadline=None, max_examples=300)
    @given(pmfs(max_size=12), pmfs(max_size=8, prefix='t'),
           st.sampled_from([0.05, 0.1, 0.3]), st.floats(0.0, 2.0))
    def test_bound_holds(self, coin, target, eps, u):
        """Test the constructed map always meets its bound"""
        report = check_mapping_bound(coin, target, eps, -math.log(eps) + u)

        self.assertTrue(report.passed, report)
