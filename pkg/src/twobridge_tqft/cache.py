"""On-disk cache of per-(p, q) algebra data: riley, Omega and iota in poly-JSON.

One file ``<p>_<q>.json`` per pair.  Bumping SCHEMA_VERSION invalidates every
existing file.  Writes go through a temporary file and ``os.replace`` so
concurrent workers never observe a partial file.
"""
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from .exactalg import UniPoly
from .frobenius import ParabolicAlgebra
from .twobridge import make_params, riley_pair

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "TWOBRIDGE_TQFT_CACHE_DIR"


def resolve_cache_dir(cli_value: Optional[str] = None) -> Optional[Path]:
    """--cache-dir wins, then the environment variable; otherwise no caching."""
    value = cli_value or os.environ.get(CACHE_ENV_VAR)
    return Path(value) if value else None


def cache_key(p: int, q: int) -> str:
    return f"{p}_{q}"


class ArtifactCache:
    def __init__(self, root):
        self.root = Path(root)

    def path(self, p: int, q: int) -> Path:
        return self.root / f"{cache_key(p, q)}.json"

    def load(self, p: int, q: int) -> Optional[dict]:
        path = self.path(p, q)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("schema") != SCHEMA_VERSION or data.get("key") != cache_key(p, q):
            return None
        return data

    def store(self, V: ParabolicAlgebra) -> Path:
        p, q = V.params.p, V.params.q
        record = {
            "schema": SCHEMA_VERSION,
            "key": cache_key(p, q),
            "riley": V.riley.to_json(),
            "omega": V.omega.to_json(),
            "iota": V.iota.to_json(),
        }
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh)
        os.replace(tmp, self.path(p, q))
        return self.path(p, q)

    def algebra(self, p: int, q: int) -> ParabolicAlgebra:
        params = make_params(p, q)
        data = self.load(p, q)
        if data is not None:
            # riley is cheap to recompute; a mismatch means a stale or foreign file
            if UniPoly.from_json(data["riley"]) == UniPoly.from_ints(riley_pair(params)[0]):
                return ParabolicAlgebra(params, omega=UniPoly.from_json(data["omega"]))
        V = ParabolicAlgebra(params)
        self.store(V)
        return V
