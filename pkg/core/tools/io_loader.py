# core/tools/io_loader.py
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple
import json
import logging
import os

from pydantic import ValidationError

from core.models.monomial import Face, MonomialIdeal
from core.tools.errors import InputError
from core.tools.monomial_core import ideal_from_dict

logger = logging.getLogger(__name__)


class InputSource(ABC):
    """Source of one JSON input document"""
    @abstractmethod
    def load(self) -> Dict:
        pass

    @abstractmethod
    def describe(self) -> str:
        pass


class JSONInputFile(InputSource):
    """JSON file on disk, re-read only when its mtime changes"""
    def __init__(self, path: str):
        self.path = path
        self._cache: Optional[Dict] = None
        self._last_read_time = 0.0

    def _should_reload(self) -> bool:
        if self._cache is None or not self._last_read_time:
            return True
        try:
            return os.path.getmtime(self.path) > self._last_read_time
        except OSError:
            return True

    def load(self) -> Dict:
        if self._should_reload():
            with open(self.path, "r", encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise InputError(f"{self.path}: top-level JSON value must be an object")
            self._cache = data
            self._last_read_time = os.path.getmtime(self.path)
            logger.debug(f"loaded {self.path}")
        return self._cache

    def describe(self) -> str:
        return f"JSON input at {self.path}"


def classify(data: Dict) -> str:
    """'ideal' for {"vars", "generators"}, 'facets' for {"m", "facets"}."""
    if "generators" in data:
        return "ideal"
    if "facets" in data:
        return "facets"
    raise InputError('input must hold either "vars"/"generators" or "m"/"facets"')


def load_ideal(data: Dict[str, Any]) -> MonomialIdeal:
    try:
        return ideal_from_dict(data)
    except ValidationError as e:
        raise InputError(f"invalid ideal: {e}")


def load_facets(data: Dict[str, Any]) -> Tuple[List[Face], int]:
    try:
        m = int(data["m"])
        facets = [tuple(sorted(int(v) for v in f)) for f in data["facets"]]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f'facet list needs integer "m" and a list "facets": {e}')
    if m < 1:
        raise InputError("a facet list needs at least one vertex")
    return facets, m


