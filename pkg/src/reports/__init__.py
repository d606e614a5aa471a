"""
Report models, atlas writer, arc-diagram renderers and verification sweeps.
"""

from .models import (
    REPORT_MODELS, AtlasIndex, AtlasRecord, AtlasRunReport, ComponentModel, CompositionReport,
    OrbitModel, PatternReport, TableauReport, VerificationReport, report_schema, to_json,
    version_stamp,
)
from .atlas import atlas_filename, index_frame, write_atlas
from .arc_diagram import build_figure, render_ascii, render_html, render_svg
from .verification import SUITES, VerificationSummary, run_verification

__all__ = [
    'REPORT_MODELS',
    'AtlasIndex',
    'AtlasRecord',
    'AtlasRunReport',
    'ComponentModel',
    'CompositionReport',
    'OrbitModel',
    'PatternReport',
    'TableauReport',
    'VerificationReport',
    'report_schema',
    'to_json',
    'version_stamp',
    'atlas_filename',
    'index_frame',
    'write_atlas',
    'build_figure',
    'render_ascii',
    'render_html',
    'render_svg',
    'SUITES',
    'VerificationSummary',
    'run_verification'
]
