import logging

from fincat.category import (
    all_spans,
    check_category_property,
    compose_functors,
    FiniteCategory,
    Functor,
)
from fincat.config import config
from fincat.construction._amalgamation import adjoin_amalgamation_step, ALL_SPANS
from fincat.construction._karoubi import karoubi_envelope
from fincat.errors import ResourceLimit
from fincat.homotopy import nerve_homology


logger = logging.getLogger(__name__)


class Stage(object):
    """One stage of the alternating construction.

    Attributes
    ----------
    index : int
        0 for the input
    category : FiniteCategory
        stage category
    inclusion : Functor or None
        inclusion of the previous stage
    report : dict
        object count, AP for the previous stage's spans, AllMono and
        homology up to d
    """

    def __init__(self, index: int, category: FiniteCategory, inclusion: Functor, report: dict):
        self.index = index
        self.category = category
        self.inclusion = inclusion
        self.report = report

    def to_dict(self) -> dict:
        return dict(self.report, stage=self.index, name=self.category.name)


def _stage_report(C: FiniteCategory, previous_spans, d: int) -> dict:
    report = {
        "objects": C.n_objects,
        "morphisms": C.n_morphisms,
        "all_mono": check_category_property(C, "AllMono").verdict.value,
    }
    if previous_spans is not None:
        report["ap_previous"] = check_category_property(
            C, "AP", spans=previous_spans).verdict.value
    try:
        report["homology"] = str(nerve_homology(C, d))
    except ResourceLimit as error:
        report["homology"] = None
        report["exhausted"] = {"budget": error.budget, "limit": error.limit}
    return report


def iterate_construction(
    C: FiniteCategory,
    steps: int,
    spans=ALL_SPANS,
    d: int = None,
    max_objects: int = None,
) -> list:
    """Alternate idempotent splitting and amalgam adjunction.

    Parameters
    ----------
    C : FiniteCategory
        stage 0
    steps : int
        number of rounds
    spans : "All" or list
        span policy of the first round; later rounds adjoin all spans
    d : int, optional
        homology truncation of the stage reports, by default
        ``config.max_dim``
    max_objects : int, optional
        object budget of every stage

    Returns
    -------
    list of Stage
        ``steps + 1`` stages starting with C
    """
    assert steps >= 0, steps
    d = config.max_dim if d is None else d
    stages = [Stage(0, C, None, _stage_report(C, None, d))]
    current = C
    for k in range(1, steps + 1):
        policy = spans if k == 1 else ALL_SPANS
        if policy == ALL_SPANS:
            previous = [
                (current.morphisms[f], current.morphisms[g])
                for f, g in all_spans(current)]
        else:
            previous = [tuple(span) for span in policy]
        split, into_split = karoubi_envelope(current)
        step = adjoin_amalgamation_step(
            split, policy, name=f"{C.name}^{k}" if C.name else None,
            max_objects=max_objects)
        inclusion = compose_functors(step.inclusion, into_split, name=f"i{k - 1}{k}")
        report = _stage_report(step.category, previous, d)
        report["amalgams"] = len(step.amalgams)
        stages.append(Stage(k, step.category, inclusion, report))
        logger.debug("stage %d: %s", k, report)
        current = step.category
    return stages
