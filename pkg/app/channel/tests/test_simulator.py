import math

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from channel.serializers import ChannelReportSerializer
from channel.simulator import build_channel_map, check_channel_bound, \
    expected_deficiency, expected_deficiency_from_spectra, \
    expected_shifted_deficiency, joint_distance, per_input_spectra
from channel.tables import Channel, ChannelMap, CoinCoupling
from core.exceptions import AlphabetMismatchError, PreconditionError
from oracle.strategies import pmfs
from source.mapping import DeterministicMap, check_mapping_bound
from spectrum.pmf import Pmf
from spectrum.spectra import build_spectrum


def identity_channel(inputs):
    return Channel.from_rows({x: Pmf.point_mass(x) for x in inputs})


def copy_coupling(inputs):
    return CoinCoupling.from_rows(
        {x: Pmf.point_mass(f'z{x}') for x in inputs}
    )


def bsc(q):
    return Channel.from_rows({
        '0': Pmf(('0', '1'), (1 - q, q)),
        '1': Pmf(('1', '0'), (1 - q, q)),
    })


class TableTests(SimpleTestCase):

    def test_missing_row_rejected(self):
        """Test every input symbol needs a row"""
        with self.assertRaises(AlphabetMismatchError) as cm:
            Channel(('a', 'b'), ('u',), {'a': Pmf.point_mass('u')})

        self.assertEqual(cm.exception.row, 'b')

    def test_unknown_output_rejected(self):
        """Test rows must stay inside the output alphabet"""
        with self.assertRaisesMessage(AlphabetMismatchError, "'w'"):
            Channel(('a',), ('u',), {'a': Pmf.point_mass('w')})

    def test_independent_coupling(self):
        """Test an independent coin repeats one row"""
        coin = Pmf.uniform(2, prefix='z')

        coupling = CoinCoupling.independent(('a', 'b'), coin)

        self.assertIs(coupling['a'], coupling['b'])
        self.assertEqual(coupling.coin_labels, ('z0', 'z1'))

    def test_rows_grouped_by_input(self):
        """Test table rows are listed input by input"""
        self.assertEqual(bsc(0.25).to_rows()[:2],
                         [('0', '0', 0.75), ('0', '1', 0.25)])


class PerInputSpectraTests(SimpleTestCase):

    def test_identity_channel(self):
        """Test point-mass rows have a zero spectrum"""
        inputs = ('a', 'b')

        spectra = per_input_spectra(identity_channel(inputs),
                                    copy_coupling(inputs))

        for x in inputs:
            self.assertEqual(list(spectra[x][1].values), [0.0])

    def test_bsc_row(self):
        """Test a binary symmetric row has two levels"""
        coin = CoinCoupling.independent(('0', '1'), Pmf.uniform(2))

        spectra = per_input_spectra(bsc(0.1), coin)

        sy = spectra['0'][1]
        np.testing.assert_allclose(sy.breakpoints, [0.9, 1.0])
        np.testing.assert_allclose(sy.values,
                                   [math.log(1 / 0.9), math.log(10)])

    def test_mismatched_inputs(self):
        """Test the channel and coupling must share inputs"""
        with self.assertRaises(AlphabetMismatchError):
            per_input_spectra(identity_channel(('a',)),
                              copy_coupling(('a', 'b')))


class ExpectationTests(SimpleTestCase):

    def setUp(self):
        self.input = Pmf(('0', '1'), (0.3, 0.7))
        self.chan = bsc(0.2)
        self.coupling = CoinCoupling.from_rows({
            '0': Pmf(('c', 'd'), (0.8, 0.2)),
            '1': Pmf(('c', 'd'), (0.2, 0.8)),
        })

    def test_matching_rows_have_no_deficiency(self):
        """Test coin rows equal to channel rows up to labels"""
        for gamma in (-1.0, 0.0):
            self.assertEqual(expected_deficiency(
                self.input, self.chan, self.coupling, gamma
            ), 0.0)
        self.assertEqual(expected_shifted_deficiency(
            self.input, self.chan, self.coupling, 0.1, 0.5
        ), 0.0)

    def test_identity_channel(self):
        """Test identity channels with a fair coin"""
        inputs = ('a', 'b')
        chan = identity_channel(inputs)
        coupling = CoinCoupling.independent(inputs, Pmf.uniform(2))
        input_pmf = Pmf(inputs, (0.5, 0.5))

        self.assertEqual(
            expected_deficiency(input_pmf, chan, coupling, math.log(2)), 0.0
        )
        self.assertEqual(
            expected_deficiency(input_pmf, chan, coupling, 0.7), 1.0
        )
        self.assertEqual(expected_shifted_deficiency(
            input_pmf, chan, coupling, 0.3, 0.01
        ), 0.0)

    def test_spectra_helper_weights_rows(self):
        """Test the spectra-level helper weights each row"""
        sx = build_spectrum(Pmf.uniform(4))
        sy = build_spectrum(Pmf.uniform(2))
        pairs = [(sx, sy), (sy, sy)]

        value = expected_deficiency_from_spectra([0.25, 0.75], pairs, 0.8)

        self.assertEqual(value, 1.0)
        self.assertEqual(
            expected_deficiency_from_spectra([0.25, 0.75], pairs, 0.0), 0.0
        )
        self.assertEqual(
            expected_deficiency_from_spectra([0.25, 0.75], pairs, 0.5), 0.75
        )

    def test_input_outside_channel(self):
        """Test an input symbol without a row is named"""
        input_pmf = Pmf(('0', '2'), (0.5, 0.5))

        with self.assertRaises(AlphabetMismatchError) as cm:
            expected_deficiency(input_pmf, self.chan, self.coupling, 0.0)

        self.assertEqual(cm.exception.row, '2')

    @settings(deadline=None)
    @given(st.floats(-2, 2), st.floats(0, 2))
    def test_monotone_in_gamma(self, gamma, step):
        """Test both expectations move monotonically with gamma"""
        args = (self.input, self.chan, self.coupling)

        self.assertLessEqual(expected_deficiency(*args, gamma),
                             expected_deficiency(*args, gamma + step))
        if gamma > 0:
            self.assertGreaterEqual(
                expected_shifted_deficiency(*args, 0.2, gamma),
                expected_shifted_deficiency(*args, 0.2, gamma + step),
            )


class ChannelMapTests(SimpleTestCase):

    def test_identity_with_copy_coin(self):
        """Test copying the input reproduces the identity channel"""
        inputs = ('a', 'b', 'c')
        chan = identity_channel(inputs)
        coupling = copy_coupling(inputs)
        input_pmf = Pmf(inputs, (0.2, 0.3, 0.5))

        cm = build_channel_map(input_pmf, chan, coupling, 0.3, 1.21)

        self.assertEqual(cm('b', 'zb'), 'b')
        self.assertEqual(joint_distance(input_pmf, chan, coupling, cm), 0.0)

    def test_zero_mass_inputs_skipped(self):
        """Test inputs of zero probability get no map"""
        inputs = ('a', 'b')
        input_pmf = Pmf(inputs, (1.0, 0.0))

        cm = build_channel_map(input_pmf, identity_channel(inputs),
                               copy_coupling(inputs), 0.3, 1.21)

        self.assertEqual(tuple(cm.maps), ('a',))

    def test_one_row_off(self):
        """Test a single wrong row contributes its mass times distance"""
        inputs = ('a', 'b')
        chan = Channel.from_rows({
            'a': Pmf(('u', 'v'), (0.5, 0.5)),
            'b': Pmf.point_mass('u'),
        })
        coupling = CoinCoupling.independent(inputs, Pmf.point_mass('z'))
        to_u = DeterministicMap.from_pairs([('z', 'u')])
        cm = ChannelMap({'a': to_u, 'b': to_u})

        d = joint_distance(Pmf(inputs, (0.25, 0.75)), chan, coupling, cm)

        self.assertEqual(d, 0.25)

    def test_row_errors_name_the_input(self):
        """Test a failing row construction names its input"""
        inputs = ('a',)
        chan = identity_channel(inputs)

        with self.assertRaisesMessage(PreconditionError, "input 'a'"):
            build_channel_map(Pmf.point_mass('a'), chan,
                              copy_coupling(inputs), 0.1, 0.5)

    @settings(deadline=None)
    @given(pmfs(max_size=6, prefix='z'), pmfs(max_size=4, prefix='y'),
           st.sampled_from([0.05, 0.1, 0.3]), st.floats(0, 2))
    def test_single_input_reduces_to_source(self, coin, target, eps, u):
        """Test a one-input channel matches source simulation exactly"""
        gamma = -math.log(eps) + u
        chan = Channel.from_rows({'x': target})
        coupling = CoinCoupling.from_rows({'x': coin})
        source = check_mapping_bound(coin, target, eps, gamma)

        report = check_channel_bound(Pmf.point_mass('x'), chan, coupling,
                                     eps, gamma)

        self.assertEqual(report.joint_distance, source.d)
        self.assertEqual(report.expected_deficiency, source.deficiency)
        self.assertEqual(report.bound, source.bound)

    @settings(deadline=None)
    @given(st.lists(pmfs(max_size=5, prefix='z'), min_size=1, max_size=3),
           st.lists(pmfs(max_size=4, prefix='y'), min_size=3, max_size=3),
           st.sampled_from([0.05, 0.1, 0.3]), st.floats(0, 2))
    def test_bound_holds(self, coins, targets, eps, u):
        """Test the joint distance never exceeds 9 eps + 10 E[mu]"""
        inputs = [f'x{i}' for i in range(len(coins))]
        chan = Channel.from_rows(dict(zip(inputs, targets)))
        coupling = CoinCoupling.from_rows(dict(zip(inputs, coins)))
        input_pmf = Pmf.uniform(len(inputs), prefix='x')

        report = check_channel_bound(input_pmf, chan, coupling, eps,
                                     -math.log(eps) + u)

        self.assertTrue(report.passed)
        data = ChannelReportSerializer(report).data
        self.assertEqual(data['rows'], len(inputs))
        self.assertIs(data['pass'], True)
