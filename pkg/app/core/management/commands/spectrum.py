from core.management.base import SpecsimCommand
from spectrum.fileio import SPECTRUM_COLUMNS, read_pmf
from spectrum.spectra import build_spectrum


class Command(SpecsimCommand):
    """Dump the spectrum function c(δ) of a pmf file as plot-ready rows"""
    help = 'Write the delta_lo,delta_hi,c_value steps of a pmf spectrum'
    default_format = 'csv'
    columns = SPECTRUM_COLUMNS

    def add_command_arguments(self, parser):
        parser.add_argument('pmf_file', help='CSV or JSON pmf')

    def compute(self, pmf_file, **options):
        pmf = self.read_input(read_pmf, pmf_file)
        spectrum = build_spectrum(pmf)
        rows = [dict(zip(self.columns, row)) for row in spectrum.to_rows()]
        report = {
            'levels': len(spectrum),
            'covered_mass': spectrum.covered_mass,
            'entropy': spectrum.entropy() if spectrum.is_full else None,
        }
        return report, rows
