# core/tools/id_generator.py
"""
Job ids derived from content, so identical jobs always get identical ids.
"""

import hashlib
import json
from typing import Any, Dict


class IDGenerator:
    """Id formats: job_<command>_<hash12>, rec_<job hash>_<sequence>"""

    @staticmethod
    def _digest(payload: Dict[str, Any]) -> str:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]

    @staticmethod
    def generate_job_id(spec: Dict[str, Any]) -> str:
        """
        Format: job_<command>_<hash>
        Example: job_golod_3f9a1c0b27de
        Thread count and output format do not change results and are left out.
        """
        payload = {k: v for k, v in spec.items() if k not in ("threads", "output")}
        command = str(spec.get("command", "unknown")).replace("-", "_")
        return f"job_{command}_{IDGenerator._digest(payload)}"

    @staticmethod
    def generate_record_id(job_id: str, sequence: int) -> str:
        """
        Format: rec_<job hash>_<sequence>
        Example: rec_3f9a1c0b27de_0007
        """
        return f"rec_{job_id.rsplit('_', 1)[-1]}_{sequence:04d}"


def new_job_id(spec: Dict[str, Any]) -> str:
    return IDGenerator.generate_job_id(spec)


def new_record_id(job_id: str, sequence: int) -> str:
    return IDGenerator.generate_record_id(job_id, sequence)
