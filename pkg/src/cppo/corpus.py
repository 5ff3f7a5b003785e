"""The default verification corpus.

A curated list of group-spec documents: enough soluble groups of order at
most 200 to make the brute-force commutator cross-checks meaningful, the
seven simple groups whose element orders are all prime powers together with
near misses that fail the property, and the automorphism extensions used in
the negative commutator-order computations.  One document carries explicit
generators rather than an atlas id so that code path stays exercised.
"""

from __future__ import annotations

import json

from .atlas import load_group_spec
from .errors import SchemaError

# Soluble and small.  Orders are noted for the reader; the builders assert them.
SOLUBLE_AND_SMALL = [
    {"atlas": "cyclic", "params": [12]},  # 12
    {"atlas": "cyclic", "params": [30]},  # 30
    {"atlas": "elem_abelian", "params": [2, 3]},  # 8
    {"atlas": "elem_abelian", "params": [3, 2]},  # 9
    {"atlas": "dihedral", "params": [4]},  # 8
    {"atlas": "dihedral", "params": [5]},  # 10
    {"atlas": "dihedral", "params": [12]},  # 24
    {"atlas": "dihedral", "params": [15]},  # 30
    {"atlas": "sym", "params": [3]},  # 6
    {"atlas": "alt", "params": [4]},  # 12
    {"name": "s4_explicit", "degree": 4, "generators": ["(1 2)", "(1 2 3 4)"]},  # 24
    {"atlas": "s4"},  # 24
    {"atlas": "q8"},  # 8
    {"atlas": "sl2_3"},  # 24
    {"atlas": "extraspecial", "params": [3, "+"]},  # 27
    {"atlas": "extraspecial", "params": [3, "-"]},  # 27
    {"atlas": "extraspecial", "params": [2, "+"]},  # 32
    {"atlas": "extraspecial", "params": [2, "-"]},  # 32
    {"atlas": "agl1", "params": [5]},  # 20
    {"atlas": "agl1", "params": [7]},  # 42
    {"atlas": "agl1", "params": [8]},  # 56
    {"atlas": "agl1", "params": [9]},  # 72
    {"atlas": "direct_product", "params": ["sym(3)", "sym(3)"]},  # 36
    {"atlas": "direct_product", "params": ["q8", "dihedral(4)"]},  # 64
    {"atlas": "direct_product", "params": ["sym(3)", "s4"]},  # 144, not CPPO
]

# Insoluble, including every group on the prime-power-element-order list,
# the four standard near misses, and the extensions with order-6 commutators.
INSOLUBLE_AND_LARGE = [
    {"atlas": "alt", "params": [5]},  # 60
    {"atlas": "psl2", "params": [4]},  # 60
    {"atlas": "psl2", "params": [5]},  # 60
    {"atlas": "psl2", "params": [7]},  # 168
    {"atlas": "psl2", "params": [8]},  # 504
    {"atlas": "psl2", "params": [9]},  # 360
    {"atlas": "psl2", "params": [17]},  # 2448
    {"atlas": "psl2", "params": [11]},  # 660, has order-6 elements
    {"atlas": "psl2", "params": [13]},  # 1092, has order-6 elements
    {"atlas": "alt", "params": [7]},  # 2520
    {"atlas": "alt", "params": [8]},  # 20160
    {"atlas": "psl3_4"},  # 20160
    {"atlas": "sz8"},  # 29120
    {"atlas": "sl2_5"},  # 120, quasisimple but not simple
    {"atlas": "sl2_9"},  # 720, quasisimple but not simple
    {"atlas": "asl2_4"},  # 960
    {"atlas": "m10"},  # 720
    {"atlas": "pgl2_9"},  # 720
    {"atlas": "psigmal2_9"},  # 720
    {"atlas": "pgammal2_9"},  # 1440
    {"atlas": "psl34_phi_ext"},  # 40320
    {"atlas": "psl34_g1"},  # 120960, the order-6 commutator witness
]


def default_corpus() -> list:
    """Fresh copies of the corpus documents, soluble block first."""
    return [dict(doc) for doc in SOLUBLE_AND_SMALL + INSOLUBLE_AND_LARGE]


def corpus_groups(documents=None) -> list:
    """(display name, group) pairs for each document."""
    if documents is None:
        documents = default_corpus()
    out = []
    for doc in documents:
        g = load_group_spec(doc)
        out.append((g.name or "unnamed", g))
    return out


def write_corpus_file(path, documents=None) -> None:
    if documents is None:
        documents = default_corpus()
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(documents, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_corpus_file(path) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            documents = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("corpus file is not well-formed: %s" % exc) from exc
    if not isinstance(documents, list):
        raise SchemaError("corpus file must hold a list of group specs")
    return documents
