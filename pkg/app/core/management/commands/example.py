import json

from core.exceptions import ParseError
from core.management.base import SpecsimCommand
from products.serializers import ConditionReportSerializer, \
    ExampleParamsSerializer
from products.suite import example_suite


REPORT_COLUMNS = tuple(ConditionReportSerializer().fields)


def read_params(path):
    with open(path, encoding='utf-8') as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno)
    serializer = ExampleParamsSerializer(data=document)
    if not serializer.is_valid():
        raise ParseError(json.dumps(serializer.errors))
    return dict(serializer.validated_data)


class Command(SpecsimCommand):
    """Reproduce one of the product-source examples at finite n"""
    help = 'Run an example from a parameter document and report its verdict'
    columns = REPORT_COLUMNS

    def add_command_arguments(self, parser):
        parser.add_argument('params_file',
                            help='JSON {"example": 1, "n": 2000, ...}')
        parser.add_argument('--n', type=int, nargs='+', default=None,
                            help='Lengths overriding the document')

    def compute(self, params_file, n, **options):
        params = self.read_input(read_params, params_file)
        example = params.pop('example')
        lengths = params.pop('n')
        if n:
            lengths = n
        if any(length < 1 for length in lengths):
            raise ParseError('n must be a positive integer')

        if len(lengths) == 1:
            report = example_suite(example, params, lengths[0])
            return dict(ConditionReportSerializer(report).data), None
        reports = example_suite(example, params, lengths)
        rows = [
            dict(row) for row in
            ConditionReportSerializer(reports, many=True).data
        ]
        return {'example': example, 'lengths': lengths}, rows
