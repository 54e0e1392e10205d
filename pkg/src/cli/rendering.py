"""Text and JSON renderings of command results."""

import json

import pandas as pd


def render_polynomial(polynomial, as_json=False):
    return polynomial.to_json() if as_json else str(polynomial)


def render_coefficient_reports(reports, as_json=False):
    if as_json:
        return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)
    blocks = []
    for report in reports:
        header = f"--- {report.family} ---"
        if not report.entries:
            blocks.append(f"{header}\n➖ not applicable: {report.note}")
            continue
        with pd.option_context("display.max_columns", None, "display.width", 200):
            table = report.to_frame().to_string(index=False)
        blocks.append("\n".join(filter(None, [header, table, report.note])))
    return "\n\n".join(blocks)


def render_verification(report, as_json=False):
    return report.to_json() if as_json else report.render()
