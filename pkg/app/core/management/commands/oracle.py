from core.exceptions import DomainError
from core.management.base import SpecsimCommand
from oracle.config import OracleConfig
from oracle.oracles import grid_report, mc_report, optimal_report
from oracle.serializers import OracleReportSerializer
from source.fileio import read_map_csv
from spectrum.fileio import read_pmf


class Command(SpecsimCommand):
    """Recompute an analytic quantity with a naive oracle"""
    help = (
        'Compare a grid, brute-force or Monte-Carlo value with its '
        'analytic counterpart'
    )

    def add_command_arguments(self, parser):
        parser.add_argument('coin_file')
        parser.add_argument('target_file')
        parser.add_argument('--kind', choices=('grid', 'optimal', 'mc'),
                            default='grid')
        parser.add_argument('--gamma', type=float, default=None)
        parser.add_argument('--shift', type=float, default=0.0,
                            help='Grid only: the ε of the shifted gap')
        parser.add_argument('--eps', type=float, default=None)
        parser.add_argument('--map', dest='map_file', default=None,
                            help='from_label,to_label map sampled by mc')
        parser.add_argument('--grid-size', type=int, default=None)
        parser.add_argument('--samples', type=int, default=None)
        parser.add_argument('--max-enum-maps', type=int, default=None)

    def compute(self, coin_file, target_file, kind, gamma, shift, eps,
                map_file, grid_size, samples, max_enum_maps, seed,
                **options):
        coin = self.read_input(read_pmf, coin_file)
        target = self.read_input(read_pmf, target_file)
        config = OracleConfig.from_settings(
            grid_size=grid_size,
            mc_samples=samples,
            rng_seed=seed,
            max_enum_maps=max_enum_maps,
        )

        if kind == 'grid':
            if gamma is None:
                raise DomainError('the grid oracle needs --gamma')
            report = grid_report(coin, target, gamma, shift, config)
        elif kind == 'optimal':
            if gamma is None or eps is None:
                raise DomainError('the optimal oracle needs --eps and --gamma')
            report = optimal_report(coin, target, eps, gamma, config)
        else:
            if map_file is None:
                raise DomainError('the mc oracle needs --map')
            phi = self.read_input(read_map_csv, map_file, target.labels)
            report = mc_report(coin, target, phi, config)
        return dict(OracleReportSerializer(report).data), None
