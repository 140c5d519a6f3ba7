"""
Excel export of a RunReport.

One sheet per report table, formatted the way the survey worksheets were:
gridlines off, bold pale-blue header row with thin borders, fixed widths.
"""

import logging

import openpyxl
from openpyxl.utils import get_column_letter

from ..config import ExcelSettings
from ..constants import COL_WIDTH_EXTRA_WIDE, COL_WIDTH_MEDIUM, COL_WIDTH_STANDARD, SHEET_SUMMARY
from ..utils import ensure_parent_dir
from .run_report import RunReport
from .styles import create_center_alignment, create_header_fill, create_header_font, create_thin_border

# Excel caps sheet titles at 31 characters
MAX_SHEET_TITLE = 31


def _column_width(values) -> int:
    longest = max((len(str(v)) for v in values), default=0)
    if longest <= COL_WIDTH_STANDARD - 2:
        return COL_WIDTH_STANDARD
    if longest <= COL_WIDTH_MEDIUM - 2:
        return COL_WIDTH_MEDIUM
    return min(longest + 2, COL_WIDTH_EXTRA_WIDE)


def _write_table(worksheet, headers, rows, settings: ExcelSettings) -> None:
    worksheet.sheet_view.showGridLines = False
    header_fill = create_header_fill(settings.header_color)
    border = create_thin_border()
    for col, header in enumerate(headers, start=1):
        cell = worksheet.cell(row=1, column=col, value=str(header))
        cell.fill = header_fill
        cell.font = create_header_font()
        cell.border = border
        cell.alignment = create_center_alignment()
    for r, row in enumerate(rows, start=2):
        for col, value in enumerate(row, start=1):
            # exact values stay strings so Excel never turns them into decimals
            worksheet.cell(row=r, column=col, value='' if value is None else str(value))
    if settings.auto_fit_columns:
        for col, header in enumerate(headers, start=1):
            column_values = [header] + [row[col - 1] for row in rows]
            worksheet.column_dimensions[get_column_letter(col)].width = _column_width(column_values)
    if settings.freeze_panes:
        worksheet.freeze_panes = 'A2'


def write_workbook(report: RunReport, output_path: str, settings: ExcelSettings) -> None:
    """
    Saves the report tables to an .xlsx workbook.

    Args:
        report (RunReport): The report to export.
        output_path (str): Destination file.
        settings (ExcelSettings): Header colour, width fitting and frozen header row.

    Raises:
        PermissionError: If unable to write to the file.
        OSError: If there's an OS-related error during saving.
    """
    try:
        workbook = openpyxl.Workbook()
        summary = workbook.active
        summary.title = SHEET_SUMMARY
        payload = report.to_payload()
        summary_rows = [[key, payload[key]] for key in ('command', 'input_digest', 'seed', 'elapsed_ms')]
        _write_table(summary, ['field', 'value'], summary_rows, settings)

        for name, table in report.tables.items():
            worksheet = workbook.create_sheet(title=name[:MAX_SHEET_TITLE])
            _write_table(worksheet, list(table.columns), table.values.tolist(), settings)

        target = ensure_parent_dir(output_path)
        workbook.save(target)
        logging.info(f"Report workbook saved successfully to: {output_path}")
    except Exception as e:
        logging.error(f"Error saving report workbook to {output_path}: {e}")
        raise
