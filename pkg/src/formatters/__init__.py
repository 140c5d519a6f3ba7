"""Text, JSON and Excel renderings of command reports."""

from .run_report import RunReport
from .styles import create_center_alignment, create_header_fill, create_header_font, create_thin_border
from .text import render_json, render_text
from .workbook import write_workbook

__all__ = [
    'RunReport',
    'create_center_alignment',
    'create_header_fill',
    'create_header_font',
    'create_thin_border',
    'render_json',
    'render_text',
    'write_workbook',
]
