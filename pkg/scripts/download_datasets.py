#!/usr/bin/env python3
"""Download and decompress the SNAP road-network datasets into ./data.

The toolkit reads plain-text edge lists, so the gzipped downloads are
decompressed here.  Re-running skips files that already exist.

Usage:
    python scripts/download_datasets.py [--dest data] [--only CA PA TX]
"""

import argparse
import gzip
import shutil
import sys
import urllib.request
from pathlib import Path

URLS = {
    "CA": "https://snap.stanford.edu/data/roadNet-CA.txt.gz",
    "PA": "https://snap.stanford.edu/data/roadNet-PA.txt.gz",
    "TX": "https://snap.stanford.edu/data/roadNet-TX.txt.gz",
}


def fetch(state: str, dest: Path) -> Path:
    url = URLS[state]
    target = dest / f"roadNet-{state}.txt"
    if target.exists():
        print(f"{target} already present, skipping")
        return target
    archive = dest / f"roadNet-{state}.txt.gz"
    print(f"downloading {url}")
    urllib.request.urlretrieve(url, archive)
    print(f"decompressing {archive}")
    with gzip.open(archive, "rb") as src, open(target, "wb") as out:
        shutil.copyfileobj(src, out)
    archive.unlink()
    return target


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", type=Path, default=Path("data"))
    parser.add_argument("--only", nargs="+", choices=sorted(URLS),
                        default=sorted(URLS))
    args = parser.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    for state in args.only:
        try:
            fetch(state, args.dest)
        except OSError as exc:
            print(f"failed to fetch roadNet-{state}: {exc}", file=sys.stderr)
            print(f"download manually from {URLS[state]} and gunzip into "
                  f"{args.dest}/", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
