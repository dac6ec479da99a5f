from channel.fileio import read_channel_csv, read_coupling_csv, \
    write_channel_map_csv
from channel.serializers import ChannelReportSerializer
from channel.simulator import build_channel_map, check_channel_bound
from core.management.base import SpecsimCommand
from spectrum.fileio import read_pmf


class Command(SpecsimCommand):
    """Simulate a channel by one deterministic map per input symbol"""
    help = 'Build per-input maps and report the joint distance and its bound'

    def add_command_arguments(self, parser):
        parser.add_argument('input_file', help='Input pmf')
        parser.add_argument('channel_file',
                            help='x_label,y_label,prob rows of W(y|x)')
        parser.add_argument('coupling_file',
                            help='x_label,z_label,prob rows of P(z|x)')
        parser.add_argument('--eps', type=float, required=True)
        parser.add_argument('--gamma', type=float, required=True)
        parser.add_argument('--out-map', default=None,
                            help='Where to write the x_label,z_label,y_label '
                                 'channel map')

    def compute(self, input_file, channel_file, coupling_file, eps, gamma,
                out_map, **options):
        input_pmf = self.read_input(read_pmf, input_file)
        chan = self.read_input(read_channel_csv, channel_file)
        coupling = self.read_input(read_coupling_csv, coupling_file)

        cm = build_channel_map(input_pmf, chan, coupling, eps, gamma)
        if out_map:
            self.write_side_file(out_map, write_channel_map_csv, cm)
        report = check_channel_bound(input_pmf, chan, coupling, eps, gamma,
                                     cm)
        return dict(ChannelReportSerializer(report).data), None
