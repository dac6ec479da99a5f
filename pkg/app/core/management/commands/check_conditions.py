from core.exceptions import DomainError
from core.management.base import SpecsimCommand
from source.serializers import SweepRowSerializer
from spectrum.fileio import read_pmf
from spectrum.spectra import MeasureBounds, build_spectrum, \
    deficiency_measure, shifted_gap


SWEEP_COLUMNS = ('gamma', 'eps', 'measure', 'measure_upper', 'gap_inf')


def sufficient_sweep(sx, sy, gammas):
    rows = []
    for gamma in gammas:
        measure = deficiency_measure(sx, sy, gamma)
        upper = None
        if isinstance(measure, MeasureBounds):
            measure, upper = measure
        rows.append({'gamma': gamma, 'measure': measure,
                     'measure_upper': upper})
    return rows


def necessary_sweep(sx, sy, pairs):
    rows = []
    gaps = {}
    for eps, gamma in pairs:
        if eps not in gaps:
            gaps[eps] = shifted_gap(sx, sy, eps)
        gap = gaps[eps]
        rows.append({
            'gamma': gamma,
            'eps': eps,
            'measure': gap.sublevel_measure(-gamma),
            'gap_inf': gap.inf(),
        })
    return rows


def pair_up(eps_list, gammas):
    """Zip eps and gamma lists, broadcasting a single value"""
    if len(eps_list) == 1:
        eps_list = eps_list * len(gammas)
    elif len(gammas) == 1:
        gammas = gammas * len(eps_list)
    if len(eps_list) != len(gammas):
        raise DomainError(
            f'{len(eps_list)} eps values cannot pair with '
            f'{len(gammas)} gamma values'
        )
    return list(zip(eps_list, gammas))


class Command(SpecsimCommand):
    """Finite-n sweep of the sufficient or the necessary condition"""
    help = 'Sweep deficiency measures or shifted-gap sub-level measures'
    columns = SWEEP_COLUMNS

    def add_command_arguments(self, parser):
        parser.add_argument('coin_file')
        parser.add_argument('target_file')
        parser.add_argument('--mode', choices=('sufficient', 'necessary'),
                            default='sufficient')
        parser.add_argument('--gamma', type=float, nargs='+', default=None)
        parser.add_argument('--eps', type=float, nargs='+', default=None,
                            help='Shifts for the necessary mode')

    def compute(self, coin_file, target_file, mode, gamma, eps, **options):
        sx = build_spectrum(self.read_input(read_pmf, coin_file))
        sy = build_spectrum(self.read_input(read_pmf, target_file))

        if not gamma:
            raise DomainError('at least one --gamma is required')
        if mode == 'sufficient':
            rows = sufficient_sweep(sx, sy, gamma)
        else:
            if not eps:
                raise DomainError('the necessary mode needs --eps')
            rows = necessary_sweep(sx, sy, pair_up(eps, gamma))
        rows = [dict(row) for row in SweepRowSerializer(rows, many=True).data]
        return {'mode': mode, 'points': len(rows)}, rows
