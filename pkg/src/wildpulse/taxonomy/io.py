"""Taxonomy file I/O: species lists, taxonomy JSON, golden graph dumps."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from wildpulse.taxonomy.graph import NameGraph, SpeciesRecord
from wildpulse.taxonomy.names import normalize_name
from wildpulse.taxonomy.queries import FolkTaxon

SPECIES_HEADER = ["scientific_name", "common_names", "order", "family"]


def read_species_file(path: str | Path) -> list[SpeciesRecord]:
    """Read a species CSV: scientific name, pipe-separated common names,
    order, family. A header row matching the canonical column names is
    skipped. Names are normalized on read."""
    records: list[SpeciesRecord] = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip():
                continue
            if row[0].strip().lower() == SPECIES_HEADER[0]:
                continue
            sci = normalize_name(row[0])
            commons = tuple(
                normalize_name(c)
                for c in (row[1].split("|") if len(row) > 1 else [])
                if c.strip()
            )
            records.append(
                SpeciesRecord(
                    scientific_name=sci,
                    common_names=commons,
                    order_name=row[2].strip() if len(row) > 2 else "",
                    family_name=row[3].strip() if len(row) > 3 else "",
                )
            )
    return records


def taxon_to_dict(taxon: FolkTaxon) -> dict:
    return {
        "taxon_id": taxon.taxon_id,
        "display_name": taxon.display_name,
        "member_species": list(taxon.member_species),
        "positive_keywords": list(taxon.positive_keywords),
        "negative_keywords": list(taxon.negative_keywords),
    }


def taxon_from_dict(obj: dict) -> FolkTaxon:
    return FolkTaxon(
        taxon_id=obj["taxon_id"],
        display_name=obj.get("display_name", obj["taxon_id"]),
        member_species=tuple(obj["member_species"]),
        positive_keywords=tuple(obj["positive_keywords"]),
        negative_keywords=tuple(obj.get("negative_keywords", [])),
    )


def write_taxonomy_file(taxa: list[FolkTaxon], path: str | Path) -> None:
    payload = {
        "schema_version": 1,
        "taxa": [taxon_to_dict(t) for t in sorted(taxa, key=lambda t: t.taxon_id)],
    }
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def read_taxonomy_file(path: str | Path) -> list[FolkTaxon]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return [taxon_from_dict(obj) for obj in payload["taxa"]]


def graph_to_golden(graph: NameGraph) -> dict:
    """Canonical JSON-able dump of a graph's structure, for golden files."""
    return {
        "nodes": sorted(
            ({"id": n.id, "kind": n.kind, "label": n.label} for n in graph.nodes.values()),
            key=lambda d: d["id"],
        ),
        "edges": sorted(
            ({"a": a, "b": b, "kind": kind} for (a, b), kind in graph.edges.items()),
            key=lambda d: (d["a"], d["b"]),
        ),
    }
