#!/usr/bin/env python3
"""Regenerates the graph documents under data/.

Blood: US blood-type shares (American Red Cross), donor compatibility edges.
Netherlands: provinces, population on 1 Jan 2023 (CBS StatLine), land adjacency.
Germany: states, area in km^2 (Destatis 2022), land adjacency without the
Niedersachsen / Mecklenburg-Vorpommern Elbe border (28 edges).
Les Miserables: Knuth's co-occurrence graph via networkx; weight is the total
co-occurrence count, clusters from Louvain (seed 0).
"""
import json
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def write(name, vertices, edges, note):
    doc = {"name": name, "note": note, "vertices": vertices, "edges": edges}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")


def blood():
    shares = [("O+", 37.4), ("O-", 6.6), ("A+", 35.7), ("A-", 6.3),
              ("B+", 8.5), ("B-", 1.5), ("AB+", 3.4), ("AB-", 0.6)]
    donors = {
        "O-": ["O+", "A+", "A-", "B+", "B-", "AB+", "AB-"],
        "O+": ["A+", "B+", "AB+"],
        "A-": ["A+", "AB-", "AB+"],
        "B-": ["B+", "AB-", "AB+"],
        "A+": ["AB+"],
        "B+": ["AB+"],
        "AB-": ["AB+"],
    }
    vertices = [{"id": k, "label": k, "weight": w} for k, w in shares]
    edges = [[a, b] for a, bs in donors.items() for b in bs]
    write("blood", vertices, edges, "US blood type distribution (American Red Cross); edge = donor compatibility")


def netherlands():
    pop = [("GR", "Groningen", 596075), ("FR", "Friesland", 654019), ("DR", "Drenthe", 498103),
           ("OV", "Overijssel", 1178442), ("FL", "Flevoland", 440095), ("GE", "Gelderland", 2133708),
           ("UT", "Utrecht", 1387643), ("NH", "Noord-Holland", 2952622), ("ZH", "Zuid-Holland", 3804906),
           ("ZE", "Zeeland", 391124), ("NB", "Noord-Brabant", 2626210), ("LI", "Limburg", 1118223)]
    adj = ["GR-FR", "GR-DR", "FR-DR", "FR-OV", "FR-FL", "DR-OV", "OV-FL", "OV-GE", "FL-GE", "FL-UT",
           "FL-NH", "GE-UT", "GE-ZH", "GE-NB", "GE-LI", "UT-ZH", "UT-NH", "NH-ZH", "ZH-NB", "ZH-ZE",
           "ZE-NB", "NB-LI"]
    vertices = [{"id": i, "label": name, "weight": float(p)} for i, name, p in pop]
    write("netherlands", vertices, [e.split("-") for e in adj],
          "province population 2023-01-01 (CBS); edge = land border")


def germany():
    area = [("SH", "Schleswig-Holstein", 15804), ("HH", "Hamburg", 755), ("NI", "Niedersachsen", 47710),
            ("HB", "Bremen", 419), ("MV", "Mecklenburg-Vorpommern", 23295), ("BB", "Brandenburg", 29654),
            ("BE", "Berlin", 891), ("ST", "Sachsen-Anhalt", 20459), ("SN", "Sachsen", 18450),
            ("TH", "Thueringen", 16202), ("HE", "Hessen", 21116), ("NW", "Nordrhein-Westfalen", 34112),
            ("RP", "Rheinland-Pfalz", 19858), ("SL", "Saarland", 2571), ("BW", "Baden-Wuerttemberg", 35748),
            ("BY", "Bayern", 70542)]
    adj = ["SH-HH", "SH-NI", "SH-MV", "HH-NI", "NI-HB", "NI-BB", "NI-ST", "NI-TH", "NI-HE", "NI-NW",
           "MV-BB", "BB-BE", "BB-ST", "BB-SN", "ST-SN", "ST-TH", "SN-TH", "SN-BY", "TH-BY", "TH-HE",
           "HE-BY", "HE-BW", "HE-RP", "HE-NW", "NW-RP", "RP-BW", "RP-SL", "BW-BY"]
    vertices = [{"id": i, "label": name, "weight": float(a)} for i, name, a in area]
    write("germany", vertices, [e.split("-") for e in adj], "state area km^2 (Destatis 2022); edge = land border")


def les_miserables():
    g = nx.les_miserables_graph()
    communities = nx.community.louvain_communities(g, weight="weight", seed=0)
    communities = sorted((sorted(c) for c in communities), key=lambda c: c[0])
    cluster = {v: f"c{i + 1}" for i, c in enumerate(communities) for v in c}
    vertices = [{"id": v, "label": v, "weight": float(g.degree(v, weight="weight")), "cluster": cluster[v]}
                for v in sorted(g.nodes)]
    edges = sorted(sorted([a, b]) for a, b in g.edges)
    write("les-miserables", vertices, edges,
          "Knuth co-occurrence graph; weight = total co-occurrences; clusters = Louvain seed 0")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    blood()
    netherlands()
    germany()
    les_miserables()
