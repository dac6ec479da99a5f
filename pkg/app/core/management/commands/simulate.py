from core.management.base import SpecsimCommand
from source.fileio import write_map_csv
from source.mapping import build_mapping, check_mapping_bound
from source.serializers import MappingReportSerializer
from spectrum.fileio import read_pmf


class Command(SpecsimCommand):
    """Build the deterministic map from a coin to a target and check it"""
    help = 'Map coin symbols onto target symbols and report d against 9ε+10μ'

    def add_command_arguments(self, parser):
        parser.add_argument('coin_file')
        parser.add_argument('target_file')
        parser.add_argument('--eps', type=float, required=True)
        parser.add_argument('--gamma', type=float, required=True)
        parser.add_argument('--out-map', default=None,
                            help='Where to write the from_label,to_label map')

    def compute(self, coin_file, target_file, eps, gamma, out_map,
                **options):
        coin = self.read_input(read_pmf, coin_file)
        target = self.read_input(read_pmf, target_file)

        phi = build_mapping(coin, target, eps, gamma)
        if out_map:
            self.write_side_file(out_map, write_map_csv, phi)
        report = check_mapping_bound(coin, target, eps, gamma, phi)
        return dict(MappingReportSerializer(report).data), None
