"""
CSV output with a commented header block
"""
import logging
from pathlib import Path
from typing import Iterable, Optional, Union

import pandas as pd

logger = logging.getLogger(__name__)


def write_frame(
    frame: pd.DataFrame,
    path: Union[str, Path],
    header: Optional[Iterable[str]] = None
) -> Path:
    """Write `frame` to `path`, preceded by `# `-prefixed header lines"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with path.open("w", newline="") as fh:
        for line in header or ():
            fh.write(f"# {line}\n")
        frame.to_csv(fh, index=False, lineterminator="\n")

    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def read_frame(path: Union[str, Path]) -> pd.DataFrame:
    """Read a CSV written by write_frame, skipping the header block"""
    return pd.read_csv(path, comment="#")
