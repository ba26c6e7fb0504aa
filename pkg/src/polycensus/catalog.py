"""Labelled catalog of small polyhedral graphs.

Labels read qqpp.nn: zero-padded size, zero-padded order, then a
counter that runs through the graphs of that size and order in listing
order.  The listing sorts by size first.  Inside a size class the unit
is a self-dual graph or a dual pair, the two partners always adjacent;
a pair whose members have different orders is keyed by the smaller
one, so the order-7 size-14 graphs each precede their order-9 duals.
Units at the same order put self-duals first, then sort by decreasing
degree sequence, the partner's degree sequence, and finally the
canonical certificate, which settles anything left.

The three graphs whose complements are again polyhedral also carry the
names they go by in the published census of that classification; the
two self-dual ones are told apart by certificate order, a convention
this module documents rather than a figure-verified identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

from .duality import dual, is_polyhedral
from .enumeration import enumerate_by_size
from .graph6 import decode, encode
from .graphs import DegreeSequence, Graph
from .isomorphism import (
    CanonicalForm,
    canonical_form,
    canonical_graph,
    is_self_complementary,
)

PUBLISHED_NAMES = ("g_1408.12", "g_1408.13", "g_1408.39")

EXPORT_FORMATS = ("graph6", "json", "dot")


class UnknownLabelError(KeyError):
    """Raised when a label is not in the catalog."""


@dataclass(frozen=True, slots=True)
class CatalogEntry:
    label: str
    graph: Graph  # stored in canonical labelling
    certificate: CanonicalForm
    self_dual: bool
    self_complementary: bool
    complement_polyhedral: bool
    dual_label: str
    published_name: str | None

    @property
    def p(self) -> int:
        return self.graph.p

    @property
    def q(self) -> int:
        return self.graph.q

    @property
    def r(self) -> int:
        """Face count, which is the dual's order."""
        return self.graph.q - self.graph.p + 2

    def degree_sequence(self) -> DegreeSequence:
        return self.graph.degree_sequence()


@dataclass(frozen=True, eq=False)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    by_label: dict[str, CatalogEntry]
    by_certificate: dict[CanonicalForm, CatalogEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def lookup(self, label: str) -> CatalogEntry:
        try:
            return self.by_label[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def entry_of(self, g: Graph) -> CatalogEntry | None:
        return self.by_certificate.get(canonical_form(g))

    def block(self, q: int, p: int) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if e.q == q and e.p == p)

    def complement_polyhedral_entries(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if e.complement_polyhedral)


def _member_key(g: Graph, partner: Graph) -> tuple:
    return (
        tuple(-d for d in g.degree_sequence()),
        tuple(-d for d in partner.degree_sequence()),
        canonical_form(g).certificate,
    )


def order_census(graphs: Iterable[Graph]) -> tuple[CatalogEntry, ...]:
    """Order a duality-closed set of polyhedral graphs and label it.

    The input must contain the dual of each of its members (up to
    isomorphism), or dual_label could not be filled in.
    """
    by_size: dict[int, dict[CanonicalForm, Graph]] = {}
    for g in graphs:
        cg = canonical_graph(g)
        by_size.setdefault(cg.q, {})[canonical_form(cg)] = cg

    drafts: list[dict] = []
    label_of: dict[CanonicalForm, str] = {}
    for q in sorted(by_size):
        group = by_size[q]
        dual_of = {c: canonical_graph(dual(g)) for c, g in group.items()}
        units = []
        seen: set[CanonicalForm] = set()
        for cert in sorted(group, key=lambda c: c.certificate):
            if cert in seen:
                continue
            g = group[cert]
            cd = canonical_form(dual_of[cert])
            if cd == cert:
                units.append((g.p, 0, _member_key(g, g), (g,)))
                seen.add(cert)
            elif cd in group:
                b = group[cd]
                if g.p != b.p:
                    a, b = (g, b) if g.p < b.p else (b, g)
                elif _member_key(g, b) > _member_key(b, g):
                    a, b = b, g
                else:
                    a = g
                units.append((a.p, 1, _member_key(a, b), (a, b)))
                seen.update((cert, cd))
            else:
                raise ValueError(
                    f"input not closed under duality: "
                    f"the dual of a ({g.p},{q}) member is missing"
                )
        units.sort(key=lambda u: u[:3])
        nn: dict[int, int] = {}
        for unit in units:
            for g in unit[3]:
                nn[g.p] = nn.get(g.p, 0) + 1
                cert = canonical_form(g)
                label = f"{q:02d}{g.p:02d}.{nn[g.p]:02d}"
                label_of[cert] = label
                drafts.append(
                    {
                        "label": label,
                        "graph": g,
                        "certificate": cert,
                        "dual_certificate": canonical_form(dual_of[cert]),
                        "self_complementary": is_self_complementary(g),
                        "complement_polyhedral": is_polyhedral(g.complement()),
                    }
                )

    names: dict[CanonicalForm, str] = {}
    flagged = [d for d in drafts if d["complement_polyhedral"]]
    flagged_self_dual = sorted(
        (d for d in flagged if d["dual_certificate"] == d["certificate"]),
        key=lambda d: d["certificate"].certificate,
    )
    flagged_rest = [d for d in flagged if d["dual_certificate"] != d["certificate"]]
    if len(flagged_self_dual) == 2 and len(flagged_rest) == 1:
        for d, name in zip(flagged_self_dual + flagged_rest, PUBLISHED_NAMES):
            names[d["certificate"]] = name

    return tuple(
        CatalogEntry(
            label=d["label"],
            graph=d["graph"],
            certificate=d["certificate"],
            self_dual=d["dual_certificate"] == d["certificate"],
            self_complementary=d["self_complementary"],
            complement_polyhedral=d["complement_polyhedral"],
            dual_label=label_of[d["dual_certificate"]],
            published_name=names.get(d["certificate"]),
        )
        for d in drafts
    )


def assemble(entries: tuple[CatalogEntry, ...]) -> Catalog:
    return Catalog(
        entries=entries,
        by_label={e.label: e for e in entries},
        by_certificate={e.certificate: e for e in entries},
    )


@cache
def build_catalog(min_size: int = 6, max_size: int = 14) -> Catalog:
    """Catalog of every polyhedral graph with min_size..max_size edges."""
    census: list[Graph] = []
    for q in range(min_size, max_size + 1):
        for classes in enumerate_by_size(q).values():
            census.extend(classes)
    return assemble(order_census(census))


# ---------------------------------------------------------------------------
# serialization

def graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode(g) + "\n" for g in graphs)


def import_graph6(text: str) -> tuple[Graph, ...]:
    return tuple(decode(line) for line in text.splitlines() if line.strip())


def dot_document(named: Iterable[tuple[str, Graph]]) -> str:
    """One DOT graph per input, vertices 0..p-1, stable byte for byte."""
    chunks = []
    for name, g in named:
        lines = [f'graph "{name}" {{']
        lines += [f"  {v};" for v in range(g.p) if g.degree(v) == 0]
        lines += [f"  {a} -- {b};" for a, b in g.edges()]
        lines.append("}")
        chunks.append("\n".join(lines) + "\n")
    return "".join(chunks)


def catalog_to_json(cat: Catalog) -> str:
    doc = {
        "schema_version": 1,
        "entries": [
            {
                "label": e.label,
                "graph6": encode(e.graph),
                "certificate": e.certificate.hex,
                "p": e.p,
                "q": e.q,
                "r": e.r,
                "degrees": e.degree_sequence().compact(),
                "self_dual": e.self_dual,
                "self_complementary": e.self_complementary,
                "complement_polyhedral": e.complement_polyhedral,
                "dual_label": e.dual_label,
                "published_name": e.published_name,
            }
            for e in cat.entries
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def catalog_from_json(text: str) -> Catalog:
    """Rebuild a catalog, refusing entries whose certificate does not
    match the stored graph."""
    doc = json.loads(text)
    if doc.get("schema_version") != 1:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    entries = []
    for item in doc["entries"]:
        g = decode(item["graph6"])
        cert = canonical_form(g)
        if cert.hex != item["certificate"]:
            raise ValueError(f"certificate mismatch for {item['label']}")
        if g.p != item["p"] or g.q != item["q"]:
            raise ValueError(f"order/size mismatch for {item['label']}")
        entries.append(
            CatalogEntry(
                label=item["label"],
                graph=canonical_graph(g),
                certificate=cert,
                self_dual=item["self_dual"],
                self_complementary=item["self_complementary"],
                complement_polyhedral=item["complement_polyhedral"],
                dual_label=item["dual_label"],
                published_name=item["published_name"],
            )
        )
    return assemble(tuple(entries))


def export(catalog: Catalog, format: str) -> bytes:
    """Serialize a catalog; deterministic byte for byte."""
    if format == "graph6":
        text = graph6_lines(e.graph for e in catalog.entries)
    elif format == "json":
        text = catalog_to_json(catalog)
    elif format == "dot":
        text = dot_document((e.label, e.graph) for e in catalog.entries)
    else:
        raise ValueError(f"unsupported format {format!r}; pick from {EXPORT_FORMATS}")
    return text.encode("utf-8")
