# core/tools/executor.py
"""
Executor - turns one JobSpec into the list of records the CLI writes out.
"""

import logging
from typing import Callable, Dict, List, Tuple

from pydantic import BaseModel

from core.models.complex import FieldConfig
from core.models.job import JobSpec, JobSummary
from core.models.monomial import MonomialIdeal
from core.models.resolution import FreeComplex, ResolutionRecord
from core.models.rooting import RootingMap, TotalOrder
from core.tools.ainfty import (
    TransferDiagram,
    check_plambda2_lemma,
    mu_table,
    side_conditions,
    transfer_diagram,
    unitality,
    verify_stasheff,
    verify_transfer_identities,
)
from core.tools.config import clear_guard_overrides, get_guard_config, set_guard_overrides
from core.tools.errors import InputError
from core.tools.golod import golod_verdict
from core.tools.id_generator import new_job_id
from core.tools.io_loader import load_facets, load_ideal
from core.tools.massey import br_condition, cross_check_mu, homology_basis
from core.tools.moment_angle import moment_angle_ranks
from core.tools.resolution import (
    differential_matrix,
    is_minimal,
    render_matrix,
    taylor_resolution,
    tor_betti_via_taylor,
)
from core.tools.rooting import (
    certify_rooted_ring,
    lyubeznik_rooting,
    parse_order,
    rooted_resolution,
    rooting_from_dict,
)
from core.tools.series import poincare_report

logger = logging.getLogger(__name__)

Records = List[BaseModel]


class Executor:
    """Dispatches a JobSpec to the tool modules; each handler returns (records, headline)."""

    def __init__(self):
        self._handlers: Dict[str, Callable[[JobSpec], Tuple[Records, str]]] = {
            "resolve": self._resolve,
            "tor": self._tor,
            "search-order": self._search_order,
            "ainfty": self._ainfty,
            "golod": self._golod,
            "massey": self._massey,
            "poincare": self._poincare,
            "moment-angle": self._moment_angle,
        }

    def run(self, spec: JobSpec) -> Records:
        job_id = new_job_id(spec.model_dump(mode="json"))
        logger.info(f"running {job_id}")
        set_guard_overrides(subsets=spec.guard_subsets, perms=spec.guard_perms)
        try:
            records, headline = self._handlers[spec.command](spec)
        finally:
            clear_guard_overrides()
        summary = JobSummary(job_id=job_id, command=spec.command, records=len(records),
                             field=self._field(spec).tag(), headline=headline)
        return records + [summary]

    # ------------------------------------------------------------------
    # shared input handling
    # ------------------------------------------------------------------

    @staticmethod
    def _field(spec: JobSpec) -> FieldConfig:
        try:
            return FieldConfig.parse(spec.field)
        except ValueError as e:
            raise InputError(str(e))

    @staticmethod
    def _ideal(spec: JobSpec) -> MonomialIdeal:
        if spec.ideal is None:
            raise InputError(f"{spec.command} needs an ideal input")
        return load_ideal(spec.ideal)

    @staticmethod
    def _rooting(spec: JobSpec, ideal: MonomialIdeal) -> RootingMap:
        if spec.pi is not None:
            return rooting_from_dict(spec.pi, ideal)
        return lyubeznik_rooting(ideal, parse_order(spec.order, ideal.r))

    def _diagram(self, spec: JobSpec, ideal: MonomialIdeal) -> TransferDiagram:
        return transfer_diagram(ideal, pi=self._rooting(spec, ideal), psi1_sign=-1)

    # ------------------------------------------------------------------
    # commands
    # ------------------------------------------------------------------

    def _resolve(self, spec: JobSpec) -> Tuple[Records, str]:
        ideal = self._ideal(spec)
        if spec.kind == "taylor":
            fc = taylor_resolution(ideal)
        else:
            fc = rooted_resolution(ideal, self._rooting(spec, ideal))
        record = resolution_record(fc, spec.emit_matrices)
        return [record], f"{fc.kind} complex, ranks {record.ranks}, minimal: {record.minimal.verdict}"

    def _tor(self, spec: JobSpec) -> Tuple[Records, str]:
        table = tor_betti_via_taylor(self._ideal(spec), self._field(spec), spec.threads)
        return [table], f"Betti numbers {table.totals}"

    def _search_order(self, spec: JobSpec) -> Tuple[Records, str]:
        ideal = self._ideal(spec)
        if spec.pi is not None:
            cert = certify_rooted_ring(ideal, "user-supplied", pi=rooting_from_dict(spec.pi, ideal))
        else:
            cert = certify_rooted_ring(ideal)
        headline = f"minimal rooted order {cert.order}" if cert.rooted else "rootedness undecided"
        return [cert], headline

    def _ainfty(self, spec: JobSpec) -> Tuple[Records, str]:
        ideal = self._ideal(spec)
        D = self._diagram(spec, ideal)
        transfer = verify_transfer_identities(D)
        stasheff = verify_stasheff(D, spec.max_n)
        records: Records = [transfer, stasheff, side_conditions(D), unitality(D, spec.max_n),
                            check_plambda2_lemma(D)]
        records.extend(mu_table(D, spec.max_n))
        return records, f"transfer identities {'hold' if transfer.passed else 'FAIL'}, " \
                        f"Stasheff up to n={stasheff.n_max} {'holds' if stasheff.passed else 'FAILS'}"

    def _golod(self, spec: JobSpec) -> Tuple[Records, str]:
        ideal = self._ideal(spec)
        pi = self._rooting(spec, ideal)
        if spec.order is None and spec.pi is None:
            cert = certify_rooted_ring(ideal)
            if cert.rooted:
                pi = lyubeznik_rooting(ideal, TotalOrder(sequence=cert.order))
        report = golod_verdict(ideal, pi=pi, field=self._field(spec), n_max=spec.max_n, threads=spec.threads)
        return [report], f"{report.verdict}, criteria agree"

    def _massey(self, spec: JobSpec) -> Tuple[Records, str]:
        ideal = self._ideal(spec)
        field = self._field(spec)
        basis = homology_basis(ideal, field, spec.threads)
        records: Records = list(basis.export())
        br = br_condition(ideal, spec.massey_k, field, basis=basis)
        records.append(br)
        D = self._diagram(spec, ideal)
        if is_minimal(D.F).verdict:
            records.append(cross_check_mu(D, field, min(spec.massey_k, 3), basis=basis, seed=spec.seed))
        else:
            logger.warning("rooted resolution is not minimal: μ cross-check skipped")
        return records, f"homology dims {basis.dims()}, (B_{spec.massey_k}) {br.holds}"

    def _poincare(self, spec: JobSpec) -> Tuple[Records, str]:
        N = spec.truncate if spec.truncate is not None else get_guard_config().default_jmax
        report = poincare_report(self._ideal(spec), N, self._field(spec), threads=spec.threads)
        if report.equality:
            headline = f"oracle equals the Serre bound through t^{N}"
        else:
            headline = f"oracle below the Serre bound at t^{report.strict_at}"
        return [report], headline

    def _moment_angle(self, spec: JobSpec) -> Tuple[Records, str]:
        facets, m = load_facets(spec.facets)
        report = moment_angle_ranks(facets, m, self._field(spec), spec.threads)
        return [report], "H^*: " + ", ".join(f"H^{d}={r}" for d, r in report.ranks.items())


def resolution_record(fc: FreeComplex, emit_matrices: bool = False) -> ResolutionRecord:
    ctx = fc.ideal.ctx
    matrices = None
    if emit_matrices:
        matrices = {j: differential_matrix(fc, j) for j in range(1, fc.top_degree + 1)}
    return ResolutionRecord(
        kind=fc.kind, order=fc.order, ranks=fc.ranks(),
        faces=[list(f) for f in fc.faces], labels=[ctx.format(fc.complex.label(f)) for f in fc.faces],
        minimal=is_minimal(fc), matrices=matrices,
    )


def render_text(record: BaseModel) -> str:
    """Human-readable form of one record."""
    if isinstance(record, ResolutionRecord):
        lines = [f"{record.kind} complex: ranks {record.ranks}, minimal: {record.minimal.verdict}"]
        for j, grid in sorted((record.matrices or {}).items()):
            lines.append(f"d{j} =")
            lines.append(render_matrix(grid))
        return "\n".join(lines)
    if isinstance(record, JobSummary):
        return f"[{record.job_id}] {record.headline}"
    return record.model_dump_json(exclude_none=True)


# Module-level instance used by the CLI
executor = Executor()
