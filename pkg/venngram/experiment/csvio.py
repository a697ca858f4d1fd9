import csv
from ..errors import DomainError
from ..probmodel import EstimatedStats, TripleMarginals
from .sweep import CopyRecord, ExperimentTable

__all__ = ['CSV_COLUMNS', 'format_float', 'write_csv', 'read_csv']

CSV_COLUMNS = ['copy_index', 'pA', 'pB', 'pC', 'pAB', 'pAC', 'pBC', 'pABC', 'pUnion', 'S',
               'config_class', 'error_note']


def format_float(value):
    r"""Prints a float with 17 significant digits, enough to read back the exact double."""
    return '{:.17g}'.format(value)


def _row(record):
    stats = record.stats
    values = [stats.pA, stats.pB, stats.pC, stats.pAB, stats.pAC, stats.pBC, stats.pABC, stats.pUnion]
    row = [str(record.copy_index)] + [format_float(value) for value in values]
    row.append('' if record.central_area is None else format_float(record.central_area))
    row.append(record.config_class or '')
    row.append(record.error_note or '')
    return row


def write_csv(table, path):
    r"""Writes the records of a table, in their current order, as CSV.

    Args:
        table (ExperimentTable): The sweep.
        path (str): Destination file. Overwritten.
    """
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for record in table.records:
            writer.writerow(_row(record))


def read_csv(path):
    r"""Reads back a file written by :func:`write_csv`.

    The number of trials and the seed are not part of the file and are ``None`` on the returned
    table, which is never flagged as sorted.

    Args:
        path (str): The CSV file.

    Returns:
        An :class:`ExperimentTable`.
    """
    records = []
    with open(path, newline='', encoding='utf-8') as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != CSV_COLUMNS:
            raise DomainError("{}: expected header {}, got {}".format(path, ','.join(CSV_COLUMNS), header))
        for line_number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(CSV_COLUMNS):
                raise DomainError("{}: line {} has {} fields, expected {}".format(
                    path, line_number, len(row), len(CSV_COLUMNS)))
            try:
                values = [float(value) for value in row[1:9]]
                area = float(row[9]) if row[9] else None
                copy_index = int(row[0])
            except ValueError as err:
                raise DomainError("{}: line {}: {}".format(path, line_number, err))
            stats = EstimatedStats(TripleMarginals(*values[:6]), values[6], values[7])
            records.append(CopyRecord(copy_index, stats, central_area=area,
                                      config_class=row[10] or None, error_note=row[11] or None))
    return ExperimentTable(records, None, len(records), None)
