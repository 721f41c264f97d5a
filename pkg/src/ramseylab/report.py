"""Serialization helpers: canonical JSON, CSV, and figure rendering.

JSON is emitted with sorted keys and two-space indent so that parsing and
re-serializing a document is byte-identical.  CSV uses comma separators,
"." decimal points, and LF line endings.  Figures are optional side outputs
rendered next to the delimited data; the CSV stays the hand-off format.
"""

import dataclasses
import json
from fractions import Fraction

import numpy as np

from .bounds import TowerExpr
from .progressions import Coloring, Progression, ProgressionKind


def to_jsonable(obj):
    """Recursively convert package types to JSON-native values.

    Fractions render as 'p/q' strings, towers and kinds as their string
    forms, tuple map keys as comma-joined strings.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return int(obj)
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, TowerExpr):
        return str(obj)
    if isinstance(obj, ProgressionKind):
        return str(obj)
    if isinstance(obj, Coloring):
        return obj.to_string()
    if isinstance(obj, Progression):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        # field-by-field so nested package types hit their own branches
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in seq]
    raise TypeError(f"not JSON-serializable: {type(obj)!r}")


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def format_cell(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def csv_lines(header, rows, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(",".join(header))
    for row in rows:
        out.append(",".join(format_cell(v) for v in row))
    return "\n".join(out) + "\n"


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _numeric(cell):
    if isinstance(cell, (int, float)) and not isinstance(cell, bool):
        return float(cell)
    if isinstance(cell, str):
        try:
            return float(cell)
        except ValueError:
            return None
    return None


def render_table_figure(header, rows, path: str, title: str = "bounds"):
    """Per-column curves over k for the numeric columns of a bounds table."""
    plt = _plt()
    if "k" not in header:
        raise ValueError("table has no k column")
    ki = header.index("k")
    fig, ax = plt.subplots(figsize=(7, 5))
    groups = {}
    for row in rows:
        label = tuple(row[: ki])  # family/param prefix columns
        groups.setdefault(label, []).append(row)
    for label, grp in groups.items():
        prefix = "/".join(str(x) for x in label)
        for col in range(ki + 1, len(header)):
            xs, ys = [], []
            for row in grp:
                y = _numeric(row[col])
                if y is not None and y > 0:
                    xs.append(int(row[ki]))
                    ys.append(y)
            if xs:
                name = f"{prefix} {header[col]}" if prefix else header[col]
                ax.plot(xs, ys, marker="o", label=name)
    ax.set_xlabel("k")
    ax.set_yscale("log")
    ax.set_title(title)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_mc_figure(report_dict: dict, path: str):
    """Estimate (with 4 standard-error whiskers) next to the bound value."""
    plt = _plt()
    est = report_dict["estimate"]
    se = report_dict["std_error"]
    bound = report_dict.get("bound_value")
    fig, ax = plt.subplots(figsize=(4, 4))
    labels = ["estimate"]
    values = [est]
    if bound is not None:
        labels.append("bound")
        values.append(bound)
    bars = ax.bar(labels, values, color=["tab:blue", "tab:orange"][: len(values)])
    ax.errorbar([0], [est], yerr=[4 * se], fmt="none", ecolor="black", capsize=4)
    for bar, v in zip(bars, values):
        ax.text(bar.get_x() + bar.get_width() / 2, v, f"{v:.4g}", ha="center", va="bottom")
    ax.set_title(report_dict.get("name", "experiment"))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
