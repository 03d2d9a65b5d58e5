import json
import logging
import re
from collections.abc import Mapping

from fincat import corpus
from fincat.category import (
    compose_functors,
    FiniteCategory,
    Functor,
    identity_functor,
    NaturalTransformation,
    opposite_category,
    product_category,
    projection_functor,
    validate_category,
)
from fincat.construction import face_poset, Poset, SimplicialComplex
from fincat.errors import UnresolvedReference, ValidationError, WorkspaceSyntaxError


logger = logging.getLogger(__name__)

KINDS = ("categories", "functors", "transformations", "complexes")


class Workspace(object):
    """Named categories, functors, transformations and complexes.

    Entries are kept as parsed JSON and built on first use; bundled
    corpus categories resolve when no file defines the name.

    Attributes
    ----------
    provenance : dict
        ``(kind, name)`` to ``(file, line)``
    """

    def __init__(self):
        self._entries = {kind: {} for kind in KINDS}
        self._built = {kind: {} for kind in KINDS}
        self._resolving = set()
        self.provenance = {}

    def add(self, kind: str, entry: Mapping, filename: str = "<memory>", line: int = 1):
        assert kind in KINDS, kind
        name = str(entry["name"])
        if name in self._entries[kind]:
            first = self.provenance[kind, name]
            raise ValidationError(
                f"{kind[:-1]} {name!r} defined twice",
                {"name": name, "first": list(first), "second": [filename, line]})
        self._entries[kind][name] = dict(entry)
        self.provenance[kind, name] = (filename, line)

    def names(self, kind: str) -> list:
        return sorted(self._entries[kind])

    def _get(self, kind, name, build):
        if name in self._built[kind]:
            return self._built[kind][name]
        if (kind, name) in self._resolving:
            raise UnresolvedReference(f"{kind[:-1]} {name!r} refers to itself")
        self._resolving.add((kind, name))
        try:
            value = build(self._entries[kind][name])
        except (KeyError, TypeError) as e:
            raise ValidationError(
                f"malformed {kind[:-1]} {name!r}: {e!r}", {"name": name})
        finally:
            self._resolving.discard((kind, name))
        self._built[kind][name] = value
        return value

    def category(self, name: str) -> FiniteCategory:
        """Category by name; complexes resolve to their face poset."""
        name = str(name)
        if name in self._entries["categories"]:
            return self._get("categories", name, self._build_category)
        if name in self._entries["complexes"]:
            if name not in self._built["categories"]:
                self._built["categories"][name] = face_poset(self.complex(name), name=name)[1]
            return self._built["categories"][name]
        try:
            C = corpus.load(name)
        except KeyError:
            raise UnresolvedReference(f"unknown category {name!r}")
        self._built["categories"][name] = C
        return C

    def functor(self, name: str) -> Functor:
        name = str(name)
        if name not in self._entries["functors"]:
            raise UnresolvedReference(f"unknown functor {name!r}")
        return self._get("functors", name, self._build_functor)

    def transformation(self, name: str) -> NaturalTransformation:
        name = str(name)
        if name not in self._entries["transformations"]:
            raise UnresolvedReference(f"unknown transformation {name!r}")
        return self._get("transformations", name, self._build_transformation)

    def complex(self, name: str) -> SimplicialComplex:
        name = str(name)
        if name not in self._entries["complexes"]:
            raise UnresolvedReference(f"unknown complex {name!r}")
        return self._get("complexes", name, self._build_complex)

    def _build_category(self, entry) -> FiniteCategory:
        name = entry["name"]
        if "poset" in entry:
            raw = entry["poset"]
            poset = Poset.from_relation(raw["elements"], [tuple(p) for p in raw.get("leq", [])])
            return poset.category(name=name)
        if "group" in entry:
            builders = {"cyclic": corpus.cyclic_group, "symmetric": corpus.symmetric_group}
            if entry["group"] not in builders:
                raise ValidationError(
                    f"unknown group family {entry['group']!r}", {"group": entry["group"]})
            return corpus.classifying_category(builders[entry["group"]](int(entry["n"])), name=name)
        if "injections" in entry:
            return corpus.injections(int(entry["injections"]), name=name)
        if "opposite" in entry:
            C = opposite_category(self.category(entry["opposite"]))
            C.name = name
            return C
        if "product" in entry:
            left, right = entry["product"]
            C = product_category(self.category(left), self.category(right))
            C.name = name
            return C
        return validate_category(entry)

    def _build_functor(self, entry) -> Functor:
        name = entry["name"]
        if "identity" in entry:
            F = identity_functor(self.category(entry["identity"]))
        elif "compose" in entry:
            G, F = entry["compose"]
            F = compose_functors(self.functor(G), self.functor(F))
        elif "projection" in entry:
            left, right, which = entry["projection"]
            if which not in (1, 2):
                raise ValidationError(
                    "projection index must be 1 or 2", {"projection": list(entry["projection"])})
            F = projection_functor(self.category(left), self.category(right), which)
            F.validate()
        else:
            for key in ("dom", "cod"):
                if key not in entry:
                    raise ValidationError(f"functor {name!r} lacks {key!r}", {"key": key})
            return Functor(
                self.category(entry["dom"]),
                self.category(entry["cod"]),
                entry.get("objects", []),
                entry.get("morphisms", []),
                name=name,
            )
        F.name = name
        return F

    def _build_transformation(self, entry) -> NaturalTransformation:
        for key in ("source", "target"):
            if key not in entry:
                raise ValidationError(
                    f"transformation {entry['name']!r} lacks {key!r}", {"key": key})
        return NaturalTransformation(
            self.functor(entry["source"]),
            self.functor(entry["target"]),
            entry.get("components", []),
            name=entry["name"],
        )

    def _build_complex(self, entry) -> SimplicialComplex:
        raw = entry["complex"]
        return SimplicialComplex(raw["facets"], vertices=raw.get("vertices"))

    def validate(self):
        """Build every entry, raising the first validation error."""
        for name in self.names("categories"):
            self.category(name)
        for name in self.names("complexes"):
            self.complex(name)
        for name in self.names("functors"):
            self.functor(name)
        for name in self.names("transformations"):
            self.transformation(name)
        return self

    def to_dict(self) -> dict:
        """Entries as parsed, grouped by kind; feeds back into
        ``parse_text``."""
        return {
            kind: [self._entries[kind][name] for name in self.names(kind)]
            for kind in KINDS if self._entries[kind]}


def _line_of(text: str, pattern: str, default: int = 1) -> int:
    match = re.search(pattern, text)
    if match is None:
        return default
    return text.count("\n", 0, match.start()) + 1


def parse_text(text: str, filename: str = "<string>", workspace: Workspace = None) -> Workspace:
    """Add the entries of one input document to a workspace.

    Raises
    ------
    WorkspaceSyntaxError
        the document is not JSON, or not an object of entry arrays
    """
    workspace = Workspace() if workspace is None else workspace
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceSyntaxError(e.msg, filename, e.lineno, e.colno)
    if not isinstance(document, Mapping):
        raise WorkspaceSyntaxError("top level must be an object", filename, 1, 1)
    unknown = sorted(set(document) - set(KINDS))
    if unknown:
        raise WorkspaceSyntaxError(f"unknown sections {unknown}", filename, 1, 1)
    for kind in KINDS:
        entries = document.get(kind, [])
        if not isinstance(entries, list):
            raise WorkspaceSyntaxError(f"{kind!r} must be an array", filename, 1, 1)
        for entry in entries:
            if not isinstance(entry, Mapping) or "name" not in entry:
                line = _line_of(text, re.escape(json.dumps(kind)))
                raise WorkspaceSyntaxError(
                    f"every entry of {kind!r} needs a name", filename, line, 1)
            name_key = r'"name"\s*:\s*' + re.escape(json.dumps(str(entry["name"])))
            workspace.add(kind, entry, filename, _line_of(text, name_key))
    logger.debug(
        "parsed %s: %s", filename,
        {kind: len(document.get(kind, [])) for kind in KINDS})
    return workspace


def parse_workspace(files, validate: bool = True) -> Workspace:
    """Read input files into one workspace.

    Parameters
    ----------
    files : iterable of path-like
        UTF-8 JSON documents
    validate : bool, optional
        build and validate every entry (the default is True)

    Returns
    -------
    Workspace
    """
    workspace = Workspace()
    for path in files:
        with open(path, encoding="utf-8") as f:
            parse_text(f.read(), str(path), workspace)
    if validate:
        workspace.validate()
    return workspace
