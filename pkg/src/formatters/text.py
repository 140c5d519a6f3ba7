"""
Plain-text and JSON renderings of a RunReport.
"""

import json

from .run_report import RunReport


def render_json(report: RunReport) -> str:
    return json.dumps(report.to_payload(), indent=2, ensure_ascii=False)


def render_text(report: RunReport) -> str:
    """Header lines, then every table through DataFrame.to_string."""
    lines = [f"command: {report.command}"]
    if report.input_digest:
        lines.append(f"input: {report.input_digest}")
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    lines.append(f"elapsed_ms: {report.elapsed_ms}")
    for name, table in report.tables.items():
        lines.append('')
        lines.append(f"[{name}]")
        lines.append('(empty)' if table.empty else table.to_string(index=False))
    return '\n'.join(lines)
