"""Regenerate fixtures/*.json from the builders in legcable.fixtures."""

import json
from pathlib import Path

from legcable import fixtures
from legcable.atlas import atlas_to_json
from legcable.negcable import tori_atlas_to_json

OUT = Path(__file__).resolve().parent.parent / "fixtures"

DOCS = {
    "unknot.json": atlas_to_json(fixtures.unknot_atlas()),
    "synthetic_companion.json": atlas_to_json(fixtures.synthetic_companion()),
    "tori_unknot_2_-3.json": tori_atlas_to_json(fixtures.trefoil_tori_atlas()),
    "tori_large_2_-3.json": tori_atlas_to_json(fixtures.large_torus_tori_atlas()),
    "tori_in_between_2_-3.json": tori_atlas_to_json(fixtures.in_between_tori_atlas()),
    "minimal_large_cable.json": fixtures.minimal_large_cable().to_json(),
}
for m in (-8, -6, -5, -4, -3, -2, 0, 1, 2, 3):
    DOCS[f"twist_{m}.json"] = atlas_to_json(fixtures.twist_knot_atlas(m))


def main():
    for name, doc in DOCS.items():
        (OUT / name).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
