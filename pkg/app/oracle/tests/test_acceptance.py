"""Seeded sweeps over random small instances"""
import math

import numpy as np
from django.test import SimpleTestCase

from channel.simulator import check_channel_bound, expected_deficiency, \
    expected_shifted_deficiency
from channel.tables import Channel, CoinCoupling
from oracle.config import OracleConfig
from oracle.instances import random_map, random_parameters, random_pmf
from oracle.oracles import brute_force_optimal_map, exact_measure, \
    grid_measure, mc_empirical_distance, sampling_tolerance
from source.coupling import log_ratio_dist, shifted_coupling
from source.distances import spectrum_cdf, variational_distance
from source.mapping import check_mapping_bound, pushforward
from spectrum.pmf import Pmf
from spectrum.spectra import build_spectrum, deficiency_measure, \
    shifted_gap


def generator(seed):
    return OracleConfig(grid_size=10, mc_samples=1, rng_seed=seed,
                        max_enum_maps=1).generator()


class ApproximationBoundSweep(SimpleTestCase):

    def test_bound_on_random_instances(self):
        """Test d <= 9 eps + 10 mu on 1000 random instances"""
        rng = generator(101)

        for _ in range(1000):
            coin = random_pmf(rng, 12)
            target = random_pmf(rng, 8, prefix='t')
            eps, gamma = random_parameters(rng)

            report = check_mapping_bound(coin, target, eps, gamma)

            self.assertLessEqual(report.d, report.bound + 1e-9)


class OracleSandwichSweep(SimpleTestCase):

    def test_optimum_below_construction_below_bound(self):
        """Test d* <= constructed d <= bound on 200 small instances"""
        rng = generator(202)

        for _ in range(200):
            coin = random_pmf(rng, 6)
            target = random_pmf(rng, 4, prefix='t')
            eps, gamma = random_parameters(rng)

            _, d_star = brute_force_optimal_map(coin, target, 4 ** 6)
            report = check_mapping_bound(coin, target, eps, gamma)

            self.assertLessEqual(d_star, report.d + 1e-12)
            self.assertLessEqual(report.d, report.bound + 1e-9)


class MeasureOracleSweep(SimpleTestCase):

    def test_grid_within_breakpoint_error(self):
        """Test |grid - exact| <= 2m/G on 200 random spectrum pairs"""
        rng = generator(303)
        grid_size = 10 ** 6

        for trial in range(200):
            sx = build_spectrum(random_pmf(rng, 8))
            sy = build_spectrum(random_pmf(rng, 8, prefix='t'))
            gamma = float(rng.uniform(-2.0, 2.0))
            shift = 0.0 if trial % 2 else float(rng.uniform(0.05, 0.9))
            m = len(sx) + len(sy)

            grid = grid_measure(sx, sy, gamma, shift, grid_size)
            exact = exact_measure(sx, sy, gamma, shift)

            self.assertLessEqual(abs(grid - exact), 2 * m / grid_size)


class CdfDominanceSweep(SimpleTestCase):

    def test_maps_raise_the_spectrum_cdf(self):
        """Test Pr{log 1/Q(Y) < c} >= Pr{log 1/P(X) < c} for Y = φ(X)"""
        rng = generator(404)

        for _ in range(500):
            p = random_pmf(rng, 10)
            q = pushforward(random_map(rng, p), p)
            for c in rng.uniform(-0.5, 6.0, size=20):
                self.assertGreaterEqual(spectrum_cdf(q, c) + 1e-12,
                                        spectrum_cdf(p, c))


class ShiftedCouplingSweep(SimpleTestCase):

    def test_marginals_and_chain(self):
        """Test exact marginals and Pr{ratio < -γ} <= μ(sub-level) + ε"""
        rng = generator(505)

        for _ in range(200):
            x = random_pmf(rng, 8)
            y = random_pmf(rng, 8, prefix='t')
            eps = float(rng.uniform(0.01, 0.99))
            gamma = float(rng.uniform(0.0, 3.0))

            joint = shifted_coupling(x, y, eps)
            for marginal, pmf in ((joint.x_marginal, x),
                                  (joint.y_marginal, y)):
                np.testing.assert_allclose(
                    [marginal.prob(label) for label in pmf.labels],
                    pmf.probs, rtol=0, atol=1e-12,
                )
            ratio = log_ratio_dist(joint)
            below = math.fsum(ratio.probs[ratio.values < -gamma - 1e-9])
            gap = shifted_gap(build_spectrum(x), build_spectrum(y), eps)

            self.assertLessEqual(
                below, gap.sublevel_measure(-gamma) + eps + 1e-12
            )


class ChannelReductionSweep(SimpleTestCase):

    def test_single_input_channels(self):
        """Test one-input channels reproduce source quantities exactly"""
        rng = generator(606)

        for _ in range(100):
            coin = random_pmf(rng, 8, prefix='z')
            target = random_pmf(rng, 6, prefix='y')
            eps, gamma = random_parameters(rng)
            input_pmf = Pmf.point_mass('x')
            chan = Channel.from_rows({'x': target})
            coupling = CoinCoupling.from_rows({'x': coin})
            sx, sy = build_spectrum(coin), build_spectrum(target)

            source = check_mapping_bound(coin, target, eps, gamma)
            report = check_channel_bound(input_pmf, chan, coupling, eps,
                                         gamma)

            self.assertEqual(report.joint_distance, source.d)
            self.assertEqual(report.bound, source.bound)
            self.assertEqual(
                expected_deficiency(input_pmf, chan, coupling, gamma),
                deficiency_measure(sx, sy, gamma),
            )
            self.assertEqual(
                expected_shifted_deficiency(input_pmf, chan, coupling, eps,
                                            gamma),
                shifted_gap(sx, sy, eps).sublevel_measure(-gamma),
            )


class MonteCarloSweep(SimpleTestCase):

    def test_sampled_distance_converges(self):
        """Test sampled distances sit within 3 √(|support|/N) of exact"""
        rng = generator(707)
        samples = 10 ** 6

        for seed in range(50):
            coin = random_pmf(rng, 8)
            phi = random_map(rng, coin)
            target = random_pmf(rng, len(phi.codomain_labels), prefix='t',
                                min_size=len(phi.codomain_labels))

            sampled = mc_empirical_distance(coin, phi, target, samples,
                                            seed=seed)
            exact = variational_distance(target, pushforward(phi, coin))

            self.assertLessEqual(
                abs(sampled - exact),
                sampling_tolerance(len(coin.support), samples),
            )
