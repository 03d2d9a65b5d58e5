import logging
from math import factorial
import re

from fincat import corpus
from fincat.category import (
    check_category_property,
    check_functor_property,
    contractibility_certificate,
    FUNCTOR_PROPERTIES,
    PROPERTIES,
    Verdict,
)
from fincat.config import config
from fincat.construction import (
    ALL_SPANS,
    barycentric_subdivide,
    face_poset,
    idempotents,
    iterate_construction,
    karoubi_envelope,
    simplicial_homology,
)
from fincat.errors import (
    EnumerationFailed,
    NotNormal,
    ResourceLimit,
    ValidationError,
    WellDefinednessFailure,
)
from fincat.group import find_isomorphism
from fincat.homotopy import (
    fundamental_group,
    homotopy_equivalence_certify,
    nerve_homology,
    quillen_a_certify,
)
from fincat.lascar import basepoint_invariance, lascar_group, verify_main_theorem
from fincat.cli._report import Report
from fincat.cli._workspace import Workspace


logger = logging.getLogger(__name__)

DEFAULT_FLAGS = {
    "category": None,
    "complex": None,
    "basepoint": None,
    "identify": None,
    "sub": None,
    "at": None,
    "property": None,
    "functor": None,
    "transformation": None,
    "side": "Slice",
    "span": None,
    "steps": 1,
    "normal_closure": False,
    "max_dim": None,
    "max_cosets": None,
    "max_objects": None,
}
BUDGET_FLAGS = ("max_dim", "max_cosets", "max_objects")
SIZE_BOUND = re.compile(r"size\s*<=\s*(\d+)")


def _split(value) -> list:
    if value is None:
        return []
    if isinstance(value, str):
        value = [value]
    return [v.strip() for item in value for v in str(item).split(",") if v.strip()]


def _require(flags, key, command):
    if not flags.get(key):
        raise ValidationError(f"{command} needs --{key.replace('_', '-')}", {"flag": key})
    return flags[key]


def _category(workspace, flags, command):
    return workspace.category(_require(flags, "category", command))


def _small_objects(C, flags, command) -> list:
    """Objects named by ``--sub``: a comma list, or ``size<=k`` for the
    objects ``U0..Uk`` of an injection category."""
    value = _require(flags, "sub", command)
    match = SIZE_BOUND.fullmatch(value.strip()) if isinstance(value, str) else None
    if match is None:
        return _split(value)
    small = [f"U{k}" for k in range(int(match.group(1)) + 1)]
    missing = [x for x in small if x not in C.objects]
    if missing:
        raise ValidationError(
            f"{C.name} has no objects {missing}", {"sub": value, "missing": missing})
    return small


def _combine(reports) -> Verdict:
    verdicts = [r.verdict for r in reports]
    for verdict in (Verdict.FAILS, Verdict.HYPOTHESES_NOT_MET, Verdict.UNKNOWN):
        if verdict in verdicts:
            return verdict
    return Verdict.HOLDS


def _identify(G) -> str:
    """Name of a recognizable group: abelian groups by their invariant
    factors, symmetric groups by isomorphism search."""
    if G.order == 1:
        return "1"
    if G.is_abelian():
        return " x ".join(f"Z/{t}" for t in G.abelian_invariants())
    k = 1
    while factorial(k) < G.order:
        k += 1
    if factorial(k) == G.order:
        try:
            if find_isomorphism(G, corpus.symmetric_group(k)) is not None:
                return f"S{k}"
        except ResourceLimit:
            logger.warning("isomorphism search against S%d exhausted", k)
    return None


def run_validate(workspace: Workspace, flags: dict):
    items = {}
    for kind in ("categories", "functors", "transformations", "complexes"):
        for name in workspace.names(kind):
            filename, line = workspace.provenance[kind, name]
            items.setdefault(kind, {})[name] = {"file": filename, "line": line}
    for name, info in items.get("categories", {}).items():
        C = workspace.category(name)
        info.update(objects=C.n_objects, morphisms=C.n_morphisms)
    if flags["category"]:
        C = workspace.category(flags["category"])
        items["category"] = {
            "name": flags["category"], "objects": C.n_objects, "morphisms": C.n_morphisms}
    return Verdict.HOLDS, items


def run_props(workspace: Workspace, flags: dict):
    data = {}
    reports = []
    if flags["functor"]:
        chosen = _split(flags["property"]) or list(FUNCTOR_PROPERTIES)
        for name in _split(flags["functor"]):
            F = workspace.functor(name)
            found = {p: check_functor_property(F, p) for p in chosen}
            data.setdefault("functors", {})[name] = {p: r.to_dict() for p, r in found.items()}
            reports.extend(found.values())
    else:
        C = _category(workspace, flags, "props")
        chosen = _split(flags["property"]) or list(PROPERTIES) + ["Contractible"]
        spans = [tuple(_split(s)) for s in flags["span"] or []] or None
        found = {}
        for p in chosen:
            if p == "Contractible":
                found[p] = contractibility_certificate(C)
            else:
                found[p] = check_category_property(
                    C, p, spans=spans if p == "AP" else None)
        data["category"] = C.name
        data["properties"] = {p: r.to_dict() for p, r in found.items()}
        reports.extend(found.values())
    if flags["property"] is None:
        return None, data
    return _combine(reports), data


def run_pi1(workspace: Workspace, flags: dict):
    C = _category(workspace, flags, "pi1")
    if not C.n_objects:
        raise ValidationError("empty category has no basepoint", {"category": C.name})
    basepoint = flags["basepoint"] or C.objects[0]
    limit = flags["identify"] or flags["max_cosets"]
    pi1 = fundamental_group(C, basepoint, max_cosets=limit)
    data = {"category": C.name, "basepoint": basepoint, "pi1": pi1.to_dict()}
    if pi1.group is None:
        return Verdict.UNKNOWN, data
    if flags["identify"] is not None:
        data["identified"] = _identify(pi1.group)
    return None, data


def run_homology(workspace: Workspace, flags: dict):
    d = config.max_dim
    if flags["complex"]:
        K = workspace.complex(flags["complex"])
        homology = simplicial_homology(K, d)
        source = {"complex": flags["complex"]}
    else:
        C = _category(workspace, flags, "homology")
        homology = nerve_homology(C, d)
        source = {"category": C.name}
    return None, dict(source, homology=homology.to_dict(), groups=str(homology))


def run_lascar(workspace: Workspace, flags: dict):
    C = _category(workspace, flags, "lascar")
    small = _small_objects(C, flags, "lascar")
    at = _split(_require(flags, "at", "lascar"))
    if len(at) == 2:
        report = basepoint_invariance(C, small, at[0], at[1])
        return report.verdict, {"category": C.name, "report": report.to_dict()}
    if len(at) != 1:
        raise ValidationError("--at takes one object or two to compare", {"at": at})
    try:
        lascar = lascar_group(C, small, at[0], normal_closure=flags["normal_closure"])
    except NotNormal as error:
        return Verdict.FAILS, {
            "category": C.name, "error": str(error), "witness": error.witness}
    return None, {"category": C.name, "lascar": lascar.to_dict()}


def run_main_theorem(workspace: Workspace, flags: dict):
    C = _category(workspace, flags, "main-theorem")
    small = _small_objects(C, flags, "main-theorem")
    report = verify_main_theorem(C, small, _require(flags, "at", "main-theorem"))
    return report.verdict, {"category": C.name, "report": report.to_dict()}


def run_quillen_a(workspace: Workspace, flags: dict):
    F = workspace.functor(_split(_require(flags, "functor", "quillen-a"))[0])
    at = _split(flags["at"]) or None
    report = quillen_a_certify(F, side=flags["side"], at=at)
    return report.verdict, {"functor": F.name, "report": report.to_dict()}


def run_equiv(workspace: Workspace, flags: dict):
    names = _split(_require(flags, "functor", "equiv"))
    if len(names) != 2:
        raise ValidationError("equiv takes two functors", {"functor": names})
    F, G = (workspace.functor(name) for name in names)
    evidence = [workspace.transformation(t) for t in _split(flags["transformation"])]
    report = homotopy_equivalence_certify(F, G, evidence)
    return report.verdict, {"functors": names, "report": report.to_dict()}


def run_amalgamate(workspace: Workspace, flags: dict):
    C = _category(workspace, flags, "amalgamate")
    spans = [tuple(_split(s)) for s in flags["span"] or []] or ALL_SPANS
    stages = iterate_construction(C, int(flags["steps"]), spans=spans)
    data = {"category": C.name, "stages": [stage.to_dict() for stage in stages]}
    last = stages[-1].report
    if "ap_previous" in last:
        return Verdict(last["ap_previous"]), data
    return None, data


def run_karoubi(workspace: Workspace, flags: dict):
    C = _category(workspace, flags, "karoubi")
    E, _ = karoubi_envelope(C)
    split = [C.morphisms[e] for e in idempotents(C) if not C.identity_mask()[e]]
    return None, {
        "category": C.name,
        "idempotents": split,
        "envelope": E.to_dict(),
    }


def _complex_homology_check(K, C, d):
    expected = simplicial_homology(K, d)
    found = nerve_homology(C, d)
    return {
        "complex": str(expected),
        "nerve": str(found),
        "agrees": expected == found,
    }


def run_face_poset(workspace: Workspace, flags: dict):
    name = _require(flags, "complex", "face-poset")
    K = workspace.complex(name)
    poset, C = face_poset(K, name=f"Face({name})")
    check = _complex_homology_check(K, C, config.max_dim)
    verdict = Verdict.HOLDS if check["agrees"] else Verdict.FAILS
    return verdict, {
        "complex": name,
        "poset": poset.to_dict(),
        "objects": C.n_objects,
        "morphisms": C.n_morphisms,
        "homology": check,
    }


def run_subdivide(workspace: Workspace, flags: dict):
    name = _require(flags, "complex", "subdivide")
    K = workspace.complex(name)
    subdivided = barycentric_subdivide(K)
    d = config.max_dim
    before, after = simplicial_homology(K, d), simplicial_homology(subdivided, d)
    verdict = Verdict.HOLDS if before == after else Verdict.FAILS
    return verdict, {
        "complex": name,
        "subdivision": subdivided.to_dict(),
        "homology": {"complex": str(before), "subdivision": str(after)},
    }


COMMANDS = {
    "validate": run_validate,
    "props": run_props,
    "pi1": run_pi1,
    "homology": run_homology,
    "lascar": run_lascar,
    "main-theorem": run_main_theorem,
    "quillen-a": run_quillen_a,
    "equiv": run_equiv,
    "amalgamate": run_amalgamate,
    "karoubi": run_karoubi,
    "face-poset": run_face_poset,
    "subdivide": run_subdivide,
}


def run_command(workspace: Workspace, command: str, flags: dict = None) -> Report:
    """Run one command against a workspace.

    Parameters
    ----------
    workspace : Workspace
        parsed input
    command : str
        one of ``COMMANDS``
    flags : dict, optional
        overrides of ``DEFAULT_FLAGS``; budget flags apply to the whole
        run through ``config.override``

    Returns
    -------
    Report
        verdict and data; an exhausted budget or a failed enumeration
        gives an Unknown report

    Raises
    ------
    ValidationError, UnresolvedReference, DisconnectedBasepoint
        input errors
    """
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}, expected one of {sorted(COMMANDS)}")
    flags = dict(DEFAULT_FLAGS, **(flags or {}))
    budgets = {k: flags[k] for k in BUDGET_FLAGS if flags[k] is not None}
    with config.override(**budgets):
        echoed = dict(flags, budgets=config.as_dict())
        try:
            verdict, data = COMMANDS[command](workspace, flags)
        except ResourceLimit as error:
            logger.warning("%s stopped: %s", command, error)
            verdict = Verdict.UNKNOWN
            data = {"exhausted": {"budget": error.budget, "limit": error.limit}}
        except EnumerationFailed as error:
            verdict, data = Verdict.UNKNOWN, {"error": str(error)}
        except WellDefinednessFailure as error:
            verdict, data = Verdict.FAILS, {"error": str(error), "witness": error.witness}
    logger.debug("%s: %s", command, None if verdict is None else verdict.value)
    return Report(command, echoed, verdict, data)
