#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SVG plots for ZicGdof
Deterministic SVG figures of GDoF regions (d1 against d2) and sum-GDoF
series (sum against alpha). No timestamps or ids, so output is byte-stable.
"""

import logging
import math
import os
from xml.sax.saxutils import escape

logger = logging.getLogger("ZicGdof.SvgPlot")

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg width="%(width)d" height="%(height)d" viewBox="0 0 %(width)d %(height)d" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(width)d" height="%(height)d" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

PALETTE = ("#000000", "#1f5fbf", "#c0392b", "#2e8b57", "#8e44ad", "#d35400")

SOLID = "solid"
DASHED = "dashed"


def _num(value):
    return "%.3f" % value


def nice_step(span, ticks=6):
    """Tick spacing of 1, 2 or 5 times a power of ten"""
    if span <= 0:
        return 1.0
    raw = span / ticks
    power = 10 ** math.floor(math.log10(raw))
    for factor in (1, 2, 5, 10):
        if raw <= factor * power:
            return factor * power
    return 10 * power


class Plot:
    """
    Axis frame with polygons and polylines in data coordinates
    """

    def __init__(self, x_label, y_label, width=480, height=480, margin=56, title=None):
        self.x_label = x_label
        self.y_label = y_label
        self.width = int(width)
        self.height = int(height)
        self.margin = int(margin)
        self.title = title
        self.shapes = []
        self.x_min = self.y_min = 0.0
        self.x_max = self.y_max = 0.0

    def require(self, x, y):
        self.x_min = min(self.x_min, x)
        self.y_min = min(self.y_min, y)
        self.x_max = max(self.x_max, x)
        self.y_max = max(self.y_max, y)

    def _add(self, kind, points, label, style):
        points = [(float(x), float(y)) for x, y in points]
        for x, y in points:
            self.require(x, y)
        color = PALETTE[len(self.shapes) % len(PALETTE)]
        self.shapes.append((kind, points, label, style, color))

    def polygon(self, points, label=None, style=SOLID):
        self._add("polygon", points, label, style)

    def polyline(self, points, label=None, style=SOLID):
        self._add("polyline", points, label, style)

    def _frame(self):
        x_step = nice_step(self.x_max - self.x_min)
        y_step = nice_step(self.y_max - self.y_min)
        x_hi = math.ceil(self.x_max / x_step) * x_step if self.x_max > 0 else x_step
        y_hi = math.ceil(self.y_max / y_step) * y_step if self.y_max > 0 else y_step
        return x_step, y_step, x_hi, y_hi

    def render(self):
        """SVG document as a string"""
        x_step, y_step, x_hi, y_hi = self._frame()
        left, top = self.margin, self.margin // 2
        inner_w = self.width - self.margin - left // 2
        inner_h = self.height - self.margin - top

        def sx(x):
            return left + (x - self.x_min) / (x_hi - self.x_min) * inner_w

        def sy(y):
            return top + inner_h - (y - self.y_min) / (y_hi - self.y_min) * inner_h

        out = [PREAMBLE % {"width": self.width, "height": self.height}]
        out.append('<g style="stroke:#000000;stroke-width:1;fill:none">')
        out.append('<line x1="%s" y1="%s" x2="%s" y2="%s"/>' % (_num(sx(self.x_min)), _num(sy(self.y_min)), _num(sx(x_hi)), _num(sy(self.y_min))))
        out.append('<line x1="%s" y1="%s" x2="%s" y2="%s"/>' % (_num(sx(self.x_min)), _num(sy(self.y_min)), _num(sx(self.x_min)), _num(sy(y_hi))))
        out.append('</g>')

        tick_style = 'font-size="11" font-family="sans-serif" fill="#333333"'
        steps = int(round((x_hi - self.x_min) / x_step))
        for i in range(steps + 1):
            x = self.x_min + i * x_step
            out.append('<line x1="%s" y1="%s" x2="%s" y2="%s" style="stroke:#000000;stroke-width:1"/>' % (_num(sx(x)), _num(sy(self.y_min)), _num(sx(x)), _num(sy(self.y_min) + 4)))
            out.append('<text x="%s" y="%s" text-anchor="middle" %s>%s</text>' % (_num(sx(x)), _num(sy(self.y_min) + 16), tick_style, "%g" % round(x, 6)))
        steps = int(round((y_hi - self.y_min) / y_step))
        for i in range(steps + 1):
            y = self.y_min + i * y_step
            out.append('<line x1="%s" y1="%s" x2="%s" y2="%s" style="stroke:#000000;stroke-width:1"/>' % (_num(sx(self.x_min) - 4), _num(sy(y)), _num(sx(self.x_min)), _num(sy(y))))
            out.append('<text x="%s" y="%s" text-anchor="end" %s>%s</text>' % (_num(sx(self.x_min) - 7), _num(sy(y) + 4), tick_style, "%g" % round(y, 6)))

        label_style = 'font-size="14" font-family="sans-serif" fill="#000000"'
        out.append('<text x="%s" y="%s" text-anchor="middle" %s>%s</text>' % (_num(left + inner_w / 2), _num(self.height - 12), label_style, escape(self.x_label)))
        out.append('<text x="%s" y="%s" text-anchor="middle" transform="rotate(-90 %s %s)" %s>%s</text>' % (
            _num(16), _num(top + inner_h / 2), _num(16), _num(top + inner_h / 2), label_style, escape(self.y_label)))
        if self.title:
            out.append('<text x="%s" y="%s" text-anchor="middle" %s>%s</text>' % (_num(left + inner_w / 2), _num(top - 8), label_style, escape(self.title)))

        for kind, points, _, style, color in self.shapes:
            dash = ";stroke-dasharray:6,4" if style == DASHED else ""
            coords = " ".join("%s,%s" % (_num(sx(x)), _num(sy(y))) for x, y in points)
            out.append('<%s points="%s" style="fill:none;stroke:%s;stroke-width:2%s"/>' % (kind, coords, color, dash))

        legend_y = top + 14
        for kind, _, label, style, color in self.shapes:
            if not label:
                continue
            dash = ";stroke-dasharray:6,4" if style == DASHED else ""
            x0 = left + inner_w - 150
            out.append('<line x1="%s" y1="%s" x2="%s" y2="%s" style="stroke:%s;stroke-width:2%s"/>' % (_num(x0), _num(legend_y - 4), _num(x0 + 24), _num(legend_y - 4), color, dash))
            out.append('<text x="%s" y="%s" %s>%s</text>' % (_num(x0 + 30), _num(legend_y), tick_style, escape(label)))
            legend_y += 16

        out.append(POSTAMBLE)
        return "\n".join(out)

    def save(self, filename):
        directory = os.path.dirname(os.path.abspath(filename))
        os.makedirs(directory, exist_ok=True)
        with open(filename, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.render())
        logger.info(f"Plot written to {filename}")


def region_plot(regions, title=None, width=480, height=480, margin=56):
    """Regions in the (d1, d2) plane

    Args:
        regions (list): (label, Region2D) pairs; the first is drawn solid, the rest dashed

    Returns:
        Plot
    """
    plot = Plot("d₁", "d₂", width=width, height=height, margin=margin, title=title)
    for index, (label, region) in enumerate(regions):
        points = [(v.d1, v.d2) for v in region.vertices]
        plot.polygon(points, label=label, style=SOLID if index == 0 else DASHED)
    return plot


def series_plot(rows, kinds, title=None, width=480, height=360, margin=56):
    """Sum-GDoF against alpha, one polyline per CSIT kind; the first is drawn solid"""
    plot = Plot("α", "sum-GDoF", width=width, height=height, margin=margin, title=title)
    for index, kind in enumerate(kinds):
        points = [(row.alpha, row.values[kind]) for row in rows]
        plot.polyline(points, label=kind, style=SOLID if index == 0 else DASHED)
    return plot
