"""
Arc-diagram rendering of link patterns.

Vertices 1..n sit on a baseline; each arc (pred(i), i) is a semicircle above
it. ASCII and SVG output are plain strings; the HTML output is an interactive
plotly figure written to a self-contained file.
"""

from typing import Dict, List, Tuple

import numpy as np
import plotly.graph_objects as go

from src.combinatorics.linkpatterns import LinkPattern, arcs

ASCII_STEP = 4


def _levels(pattern: LinkPattern) -> Dict[Tuple[int, int], int]:
    """Assign each arc the lowest row not shared with an overlapping arc, short arcs first."""
    placed: Dict[int, List[Tuple[int, int]]] = {}
    levels = {}
    for arc in sorted(arcs(pattern), key=lambda a: (a[1] - a[0], a[0])):
        level = 0
        while any(not (arc[1] < a or b < arc[0]) for a, b in placed.get(level, [])):
            level += 1
        placed.setdefault(level, []).append(arc)
        levels[arc] = level
    return levels


def render_ascii(pattern: LinkPattern) -> str:
    """
    Text drawing with one row per arc level, highest arcs on top.

    Examples:
        >>> print(render_ascii(from_blocks([{1, 3}, {2}], 3)))
        +-------+
        |       |
        1   2   3
    """
    n = pattern.n
    if n == 0:
        return "(empty pattern)"
    width = ASCII_STEP * (n - 1) + len(str(n))
    levels = _levels(pattern)
    depth = max(levels.values()) + 1 if levels else 0

    def x(i: int) -> int:
        return ASCII_STEP * (i - 1)

    lines = []
    for level in range(depth - 1, -1, -1):
        row = [' '] * width
        for (a, b), lv in levels.items():
            if lv > level:
                row[x(a)] = row[x(b)] = '|'
        for (a, b), lv in levels.items():
            if lv == level:
                for col in range(x(a), x(b) + 1):
                    row[col] = '-'
                row[x(a)] = row[x(b)] = '+'
        lines.append(''.join(row).rstrip())
    if depth:
        legs = [' '] * width
        for a, b in levels:
            legs[x(a)] = legs[x(b)] = '|'
        lines.append(''.join(legs).rstrip())

    labels = [' '] * width
    for i in range(1, n + 1):
        for k, ch in enumerate(str(i)):
            if x(i) + k < width:
                labels[x(i) + k] = ch
    lines.append(''.join(labels).rstrip())
    return '\n'.join(lines)


def render_svg(pattern: LinkPattern, unit: int = 40, stroke_width: int = 2) -> str:
    """
    Self-contained SVG 1.1 document.

    Vertex i sits at x = i * unit; arc (p, i) is a semicircle of radius
    (i - p) * unit / 2.
    """
    n = pattern.n
    pattern_arcs = arcs(pattern)
    max_radius = max(((b - a) * unit / 2 for a, b in pattern_arcs), default=0)
    width = (n + 1) * unit
    baseline = max_radius + unit
    height = baseline + unit

    def num(value: float) -> str:
        return f"{value:g}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{num(width)}" '
        f'height="{num(height)}" viewBox="0 0 {num(width)} {num(height)}">',
        f'  <title>{pattern}</title>',
    ]
    for a, b in pattern_arcs:
        radius = (b - a) * unit / 2
        parts.append(
            f'  <path d="M {num(a * unit)} {num(baseline)} A {num(radius)} {num(radius)} 0 0 1 '
            f'{num(b * unit)} {num(baseline)}" fill="none" stroke="black" '
            f'stroke-width="{stroke_width}"/>')
    for i in range(1, n + 1):
        parts.append(f'  <circle cx="{num(i * unit)}" cy="{num(baseline)}" r="{num(unit / 10)}" fill="black"/>')
        parts.append(f'  <text x="{num(i * unit)}" y="{num(baseline + unit / 2)}" '
                     f'text-anchor="middle" font-size="{num(unit / 3)}">{i}</text>')
    parts.append('</svg>')
    return '\n'.join(parts) + '\n'


def build_figure(pattern: LinkPattern) -> go.Figure:
    """Interactive plotly figure: vertices as markers, arcs as semicircles."""
    fig = go.Figure()
    theta = np.linspace(0, np.pi, 60)

    for a, b in arcs(pattern):
        center, radius = (a + b) / 2, (b - a) / 2
        fig.add_trace(
            go.Scatter(
                x=center - radius * np.cos(theta),
                y=radius * np.sin(theta),
                mode='lines',
                name=f'{a}-{b}',
                line=dict(color='#636EFA', width=2),
                hoverinfo='name'
            )
        )

    vertices = list(range(1, pattern.n + 1))
    fig.add_trace(
        go.Scatter(
            x=vertices,
            y=[0] * len(vertices),
            mode='markers+text',
            name='vertices',
            text=[str(i) for i in vertices],
            textposition='bottom center',
            marker=dict(color='black', size=10)
        )
    )

    fig.update_xaxes(visible=False)
    fig.update_yaxes(visible=False, scaleanchor='x', scaleratio=1)
    fig.update_layout(
        title=str(pattern),
        showlegend=False,
        plot_bgcolor='white'
    )
    return fig


def render_html(pattern: LinkPattern, path: str):
    """Write the plotly figure as a standalone HTML file."""
    build_figure(pattern).write_html(path, include_plotlyjs=True, full_html=True)
