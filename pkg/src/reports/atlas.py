"""
Atlas writer: one JSON AtlasRecord per Jordan type plus an index.
"""

import json
import os
import sys
from typing import List, Optional

import pandas as pd

import config
from src.combinatorics.shapes import Partition, partitions
from src.errors import SpringerKitError, check_bound
from src.geometry.classify import classify_shape
from src.reports.models import AtlasIndex, AtlasRecord, to_json, version_stamp

INDEX_COLUMNS = ['file', 'shape', 'n', 'springer_dim', 'components', 'BC', 'R',
                 'genBC', 'genR', 'singular', 'smooth', 'unknown', 'exists_singular']


def atlas_filename(lam: Partition) -> str:
    """
    Examples:
        >>> atlas_filename(Partition((2, 2, 1, 1)))
        'atlas_2-2-1-1.json'
    """
    return 'atlas_' + '-'.join(str(p) for p in lam.parts) + '.json'


def build_record(lam: Partition, stamp: bool = True, jobs: int = 1) -> AtlasRecord:
    return AtlasRecord.from_classification(classify_shape(lam, jobs=jobs), stamp=stamp)


def index_frame(records: List[AtlasRecord]) -> pd.DataFrame:
    """Summary table of the atlas, one row per shape."""
    rows = []
    for record in records:
        row = {'file': atlas_filename(Partition(tuple(record.shape))),
               'shape': ','.join(str(p) for p in record.shape),
               'n': record.n,
               'springer_dim': record.springer_dim}
        row.update(record.summary.model_dump())
        rows.append(row)
    return pd.DataFrame(rows, columns=INDEX_COLUMNS)


def write_atlas(max_n: int, out_dir: str, stamp: bool = True, jobs: int = 1,
                verbose: bool = True, bound: Optional[int] = None) -> List[str]:
    """
    Write atlas_<shape>.json for every partition of 1..max_n and index.json.

    Returns:
        Paths written, index last

    Raises:
        SizeBoundError: if max_n exceeds the enumeration bound
        SpringerKitError: if out_dir cannot be written
    """
    check_bound('atlas', max_n, config.MAX_N if bound is None else bound)
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as e:
        raise SpringerKitError(f"Cannot create output directory {out_dir}: {e}")

    records = []
    written = []
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            record = build_record(lam, stamp=stamp, jobs=jobs)
            path = os.path.join(out_dir, atlas_filename(lam))
            _write(path, to_json(record))
            records.append(record)
            written.append(path)
            if verbose:
                print(f"✓ {atlas_filename(lam)}: {record.summary.components} components, "
                      f"{record.summary.singular} singular", file=sys.stderr)

    index = index_frame(records)
    payload = AtlasIndex(
        max_n=max_n,
        shapes=json.loads(index.to_json(orient='records')),
        tool_version=version_stamp(stamp),
    )
    index_path = os.path.join(out_dir, 'index.json')
    _write(index_path, to_json(payload))
    written.append(index_path)
    return written


def _write(path: str, text: str):
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise SpringerKitError(f"Cannot write {path}: {e}")
