import json
import logging
import os
from datetime import datetime
from pathlib import Path

import pandas as pd


def render_json(result):
    return json.dumps(result.to_dict(), sort_keys=True)


def render_text(result):
    d = result.to_dict()
    lines = [
        f"has_odd_hole: {str(d['has_odd_hole']).lower()}",
        f"min_length: {d['min_length'] if d['min_length'] is not None else '-'}",
        f"hole: {' '.join(str(v) for v in d['hole']) if d['hole'] else '-'}",
        f"detector: {d['detector'] or '-'}",
        f"graph: n={d['graph']['n']} m={d['graph']['m']}",
    ]
    timings = " ".join(f"{name}={'-' if ms is None else f'{ms:.3f}'}" for name, ms in d["timings"].items())
    lines.append(f"timings_ms: {timings or '-'}")
    if result.skipped:
        lines.append(f"skipped: {' '.join(result.skipped)}")
    return "\n".join(lines)


def render(result, output):
    return render_json(result) if output == "json" else render_text(result)


def results_row(args, result):
    d = result.to_dict()
    row = {
        "time": datetime.now().strftime("%Y_%m_%d-%H_%M_%S"),
        "input": getattr(args, "input", None),
        "mode": getattr(args, "mode", args.command),
        "n": d["graph"]["n"],
        "m": d["graph"]["m"],
        "has_odd_hole": d["has_odd_hole"],
        "min_length": d["min_length"],
        "detector": d["detector"],
        "hole": " ".join(str(v) for v in d["hole"]) if d["hole"] else "",
        "skipped": " ".join(result.skipped),
    }
    for name, ms in d["timings"].items():
        row[f"ms_{name}"] = ms
    return row


def save_results_to_csv(path, row):
    metrics_path = Path(path)
    if metrics_path.exists() and os.path.getsize(metrics_path) > 0:
        metrics_df = pd.read_csv(metrics_path)
    else:
        metrics_df = pd.DataFrame()
    metrics_df = pd.concat([metrics_df, pd.DataFrame([row])], ignore_index=True)
    metrics_path.parent.mkdir(parents=True, exist_ok=True)
    metrics_df.to_csv(metrics_path, index=False)
    logging.info(f"Appended results row {len(metrics_df)} to {metrics_path}")
