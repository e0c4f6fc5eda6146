#!/usr/bin/env python3
"""Build the vendored benchmark CSVs under src/coforest/datasets/.

Lenses is the exact canonical 24-row table. Zoo is reproduced
animal-by-animal from its published attribute values. Soybean (small),
Hayes-Roth and Caesarian cannot be redistributed verbatim here, so they
are rebuilt as seeded, deterministic reconstructions that keep each
dataset's documented shape (n, l, class sizes, value domains) and its
class-discriminating structure. Run scripts/fetch_datasets.py to replace
any of these with pristine UCI copies when network access is available.

Running this script is idempotent: fixed seeds, stable output.
"""

from __future__ import annotations

import csv
import json
import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "src", "coforest", "datasets")


def write_csv(name, header, rows):
    path = os.path.join(OUT, name)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


# --------------------------------------------------------------------------
# Lenses: complete 3x2x2x2 factorial, canonical fitting rules.
# age: 1 young, 2 pre-presbyopic, 3 presbyopic; prescription: 1 myope,
# 2 hypermetrope; astigmatic: 1 no, 2 yes; tear_rate: 1 reduced, 2 normal;
# class: 1 hard, 2 soft, 3 none.
LENSES = [
    (1, 1, 1, 1, 3), (1, 1, 1, 2, 2), (1, 1, 2, 1, 3), (1, 1, 2, 2, 1),
    (1, 2, 1, 1, 3), (1, 2, 1, 2, 2), (1, 2, 2, 1, 3), (1, 2, 2, 2, 1),
    (2, 1, 1, 1, 3), (2, 1, 1, 2, 2), (2, 1, 2, 1, 3), (2, 1, 2, 2, 1),
    (2, 2, 1, 1, 3), (2, 2, 1, 2, 2), (2, 2, 2, 1, 3), (2, 2, 2, 2, 3),
    (3, 1, 1, 1, 3), (3, 1, 1, 2, 3), (3, 1, 2, 1, 3), (3, 1, 2, 2, 1),
    (3, 2, 1, 1, 3), (3, 2, 1, 2, 2), (3, 2, 2, 1, 3), (3, 2, 2, 2, 3),
]


def build_lenses():
    write_csv(
        "lenses.csv",
        ["age", "prescription", "astigmatic", "tear_rate", "class"],
        LENSES,
    )


# --------------------------------------------------------------------------
# Zoo: 101 animals, 16 boolean/counted traits, 7 classes. The animal name
# is an identifier, not an attribute, and is not written to the CSV.
ZOO = """\
aardvark,1,0,0,1,0,0,1,1,1,1,0,0,4,0,0,1,1
antelope,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
bass,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,0,4
bear,1,0,0,1,0,0,1,1,1,1,0,0,4,0,0,1,1
boar,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
buffalo,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
calf,1,0,0,1,0,0,0,1,1,1,0,0,4,1,1,1,1
carp,0,0,1,0,0,1,0,1,1,0,0,1,0,1,1,0,4
catfish,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,0,4
cavy,1,0,0,1,0,0,0,1,1,1,0,0,4,0,1,0,1
cheetah,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
chicken,0,1,1,0,1,0,0,0,1,1,0,0,2,1,1,0,2
chub,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,0,4
clam,0,0,1,0,0,0,1,0,0,0,0,0,0,0,0,0,7
crab,0,0,1,0,0,1,1,0,0,0,0,0,4,0,0,0,7
crayfish,0,0,1,0,0,1,1,0,0,0,0,0,6,0,0,0,7
crow,0,1,1,0,1,0,1,0,1,1,0,0,2,1,0,0,2
deer,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
dogfish,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,1,4
dolphin,0,0,0,1,0,1,1,1,1,1,0,1,0,1,0,1,1
dove,0,1,1,0,1,0,0,0,1,1,0,0,2,1,1,0,2
duck,0,1,1,0,1,1,0,0,1,1,0,0,2,1,0,0,2
elephant,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
flamingo,0,1,1,0,1,0,0,0,1,1,0,0,2,1,0,1,2
flea,0,0,1,0,0,0,0,0,0,1,0,0,6,0,0,0,6
frog,0,0,1,0,0,1,1,1,1,1,0,0,4,0,0,0,5
frog,0,0,1,0,0,1,1,1,1,1,1,0,4,0,0,0,5
fruitbat,1,0,0,1,1,0,0,1,1,1,0,0,2,1,0,0,1
giraffe,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
girl,1,0,0,1,0,0,1,1,1,1,0,0,2,0,1,1,1
gnat,0,0,1,0,1,0,0,0,0,1,0,0,6,0,0,0,6
goat,1,0,0,1,0,0,0,1,1,1,0,0,4,1,1,1,1
gorilla,1,0,0,1,0,0,0,1,1,1,0,0,2,0,0,1,1
gull,0,1,1,0,1,1,1,0,1,1,0,0,2,1,0,0,2
haddock,0,0,1,0,0,1,0,1,1,0,0,1,0,1,0,0,4
hamster,1,0,0,1,0,0,0,1,1,1,0,0,4,1,1,0,1
hare,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,0,1
hawk,0,1,1,0,1,0,1,0,1,1,0,0,2,1,0,0,2
herring,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,0,4
honeybee,1,0,1,0,1,0,0,0,0,1,1,0,6,0,1,0,6
housefly,1,0,1,0,1,0,0,0,0,1,0,0,6,0,0,0,6
kiwi,0,1,1,0,0,0,1,0,1,1,0,0,2,1,0,0,2
ladybird,0,0,1,0,1,0,1,0,0,1,0,0,6,0,0,0,6
lark,0,1,1,0,1,0,0,0,1,1,0,0,2,1,0,0,2
leopard,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
lion,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
lobster,0,0,1,0,0,1,1,0,0,0,0,0,6,0,0,0,7
lynx,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
mink,1,0,0,1,0,1,1,1,1,1,0,0,4,1,0,1,1
mole,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,0,1
mongoose,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
moth,1,0,1,0,1,0,0,0,0,1,0,0,6,0,0,0,6
newt,0,0,1,0,0,1,1,1,1,1,0,0,4,1,0,0,5
octopus,0,0,1,0,0,1,1,0,0,0,0,0,8,0,0,1,7
opossum,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,0,1
oryx,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,1,1
ostrich,0,1,1,0,0,0,0,0,1,1,0,0,2,1,0,1,2
parakeet,0,1,1,0,1,0,0,0,1,1,0,0,2,1,1,0,2
penguin,0,1,1,0,0,1,1,0,1,1,0,0,2,1,0,1,2
pheasant,0,1,1,0,1,0,0,0,1,1,0,0,2,1,0,0,2
pike,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,1,4
piranha,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,0,4
pitviper,0,0,1,0,0,0,1,1,1,1,1,0,0,1,0,0,3
platypus,1,0,1,1,0,1,1,0,1,1,0,0,4,1,0,1,1
polecat,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
pony,1,0,0,1,0,0,0,1,1,1,0,0,4,1,1,1,1
porpoise,0,0,0,1,0,1,1,1,1,1,0,1,0,1,0,1,1
puma,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
pussycat,1,0,0,1,0,0,1,1,1,1,0,0,4,1,1,1,1
raccoon,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
reindeer,1,0,0,1,0,0,0,1,1,1,0,0,4,1,1,1,1
rhea,0,1,1,0,0,0,1,0,1,1,0,0,2,1,0,1,2
scorpion,0,0,0,0,0,0,1,0,0,1,1,0,8,1,0,0,7
seahorse,0,0,1,0,0,1,0,1,1,0,0,1,0,1,0,0,4
seal,1,0,0,1,0,1,1,1,1,1,0,1,0,0,0,1,1
sealion,1,0,0,1,0,1,1,1,1,1,0,1,2,1,0,1,1
seasnake,0,0,0,0,0,1,1,1,1,0,1,0,0,1,0,0,3
seawasp,0,0,1,0,0,1,1,0,0,0,1,0,0,0,0,0,7
skimmer,0,1,1,0,1,1,1,0,1,1,0,0,2,1,0,0,2
skua,0,1,1,0,1,1,1,0,1,1,0,0,2,1,0,0,2
slowworm,0,0,1,0,0,0,1,1,1,1,0,0,0,1,0,0,3
slug,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,7
sole,0,0,1,0,0,1,0,1,1,0,0,1,0,1,0,0,4
sparrow,0,1,1,0,1,0,0,0,1,1,0,0,2,1,0,0,2
squirrel,1,0,0,1,0,0,0,1,1,1,0,0,2,1,0,0,1
starfish,0,0,1,0,0,1,1,0,0,0,0,0,5,0,0,0,7
stingray,0,0,1,0,0,1,1,1,1,0,1,1,0,1,0,1,4
swan,0,1,1,0,1,1,0,0,1,1,0,0,2,1,0,1,2
termite,0,0,1,0,0,0,0,0,0,1,0,0,6,0,0,0,6
toad,0,0,1,0,0,1,0,1,1,1,0,0,4,0,0,0,5
tortoise,0,0,1,0,0,0,0,0,1,1,0,0,4,1,0,1,3
tuatara,0,0,1,0,0,0,1,1,1,1,0,0,4,1,0,0,3
tuna,0,0,1,0,0,1,1,1,1,0,0,1,0,1,0,1,4
vampire,1,0,0,1,1,0,0,1,1,1,0,0,2,1,0,0,1
vole,1,0,0,1,0,0,0,1,1,1,0,0,4,1,0,0,1
vulture,0,1,1,0,1,0,1,0,1,1,0,0,2,1,0,1,2
wallaby,1,0,0,1,0,0,0,1,1,1,0,0,2,1,0,1,1
wasp,1,0,1,0,1,0,0,0,0,1,1,0,6,0,0,0,6
wolf,1,0,0,1,0,0,1,1,1,1,0,0,4,1,0,1,1
worm,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,7
wren,0,1,1,0,1,0,0,0,1,1,0,0,2,1,0,0,2
"""

ZOO_HEADER = [
    "hair", "feathers", "eggs", "milk", "airborne", "aquatic", "predator",
    "toothed", "backbone", "breathes", "venomous", "fins", "legs", "tail",
    "domestic", "catsize", "class",
]


def build_zoo():
    rows = [line.split(",")[1:] for line in ZOO.strip().splitlines()]
    assert len(rows) == 101 and all(len(r) == 17 for r in rows)
    write_csv("zoo.csv", ZOO_HEADER, rows)


# --------------------------------------------------------------------------
# Soybean (small): 47 samples, 35 attributes, 4 diseases
# (D1 stem canker, D2 charcoal rot, D3 rhizoctonia root rot,
# D4 phytophthora rot; 10/10/10/17). Disease signatures follow the
# documented symptom profiles; environment/context attributes carry
# seeded within-class variation, and attributes uninformative for these
# four diseases are constant, as in the original.

SOY_HEADER = [
    "date", "plant_stand", "precip", "temp", "hail", "crop_hist",
    "area_damaged", "severity", "seed_tmt", "germination", "plant_growth",
    "leaves", "leafspots_halo", "leafspots_marg", "leafspot_size",
    "leaf_shread", "leaf_malf", "leaf_mild", "stem", "lodging",
    "stem_cankers", "canker_lesion", "fruiting_bodies", "external_decay",
    "mycelium", "int_discolor", "sclerotia", "fruit_pods", "fruit_spots",
    "seed", "mold_growth", "seed_discolor", "seed_size", "shriveling",
    "roots",
]


def build_soybean(rng):
    def pick(options, probs=None):
        return int(rng.choice(options, p=probs))

    rows = []
    for label, count in (("D1", 10), ("D2", 10), ("D3", 10), ("D4", 17)):
        for _ in range(count):
            row = {h: 0 for h in SOY_HEADER}
            row["plant_growth"] = 1
            row["leaves"] = 1
            row["stem"] = 1
            row["fruit_spots"] = 4
            row["hail"] = pick([0, 1], [0.7, 0.3])
            row["crop_hist"] = pick([0, 1, 2, 3])
            row["seed_tmt"] = pick([0, 1], [0.55, 0.45])
            row["germination"] = pick([0, 1, 2])
            row["lodging"] = pick([0, 1], [0.25, 0.75])
            if label == "D1":
                row["date"] = pick([3, 4, 5, 6])
                row["plant_stand"] = 0
                row["precip"] = 2
                row["temp"] = 1
                row["area_damaged"] = pick([0, 1])
                row["severity"] = pick([1, 2], [0.7, 0.3])
                row["stem_cankers"] = 3
                row["canker_lesion"] = 1
                row["fruiting_bodies"] = 1
                row["external_decay"] = 1
                row["fruit_pods"] = 0
                row["roots"] = 0
            elif label == "D2":
                row["date"] = pick([3, 4, 5, 6])
                row["plant_stand"] = 0
                row["precip"] = 0
                row["temp"] = 2
                row["area_damaged"] = pick([0, 2, 3])
                row["severity"] = 1
                row["stem_cankers"] = 0
                row["canker_lesion"] = 3
                row["fruiting_bodies"] = 0
                row["external_decay"] = 0
                row["int_discolor"] = 2
                row["sclerotia"] = 1
                row["fruit_pods"] = 0
                row["roots"] = 0
            elif label == "D3":
                row["date"] = pick([0, 1, 2])
                row["plant_stand"] = 1
                row["precip"] = 2
                row["temp"] = pick([0, 1], [0.7, 0.3])
                row["area_damaged"] = 1
                row["severity"] = pick([1, 2], [0.2, 0.8])
                row["stem_cankers"] = 1
                row["canker_lesion"] = 2
                row["fruiting_bodies"] = 0
                row["external_decay"] = 1
                row["fruit_pods"] = 3
                row["roots"] = 1
            else:  # D4
                row["date"] = pick([0, 1, 2, 3])
                row["plant_stand"] = 1
                row["precip"] = 2
                row["temp"] = pick([0, 1], [0.45, 0.55])
                row["area_damaged"] = pick([0, 1])
                row["severity"] = pick([1, 2], [0.6, 0.4])
                row["stem_cankers"] = pick([1, 2], [0.3, 0.7])
                row["canker_lesion"] = 2
                row["fruiting_bodies"] = 0
                row["external_decay"] = 1
                row["fruit_pods"] = 3
                row["roots"] = 1
            rows.append([row[h] for h in SOY_HEADER] + [label])
    order = rng.permutation(len(rows))
    rows = [rows[i] for i in order]
    write_csv("soybean_small.csv", SOY_HEADER + ["class"], rows)


# --------------------------------------------------------------------------
# Hayes-Roth: 132 samples, 4 attributes, 3 classes (51/51/30). Classes 1
# and 2 cluster around prototypes over {1,2,3}; every class-3 sample has
# the value 4 on at least one of age/education/marital. Hobby is random.


def build_hayes_roth(rng):
    def proto_draw(proto):
        if rng.random() < 0.55:
            return proto
        return int(rng.choice([v for v in (1, 2, 3) if v != proto]))

    rows = []
    for _ in range(51):
        rows.append([
            int(rng.integers(1, 4)),
            proto_draw(1), proto_draw(1), proto_draw(2), 1,
        ])
    for _ in range(51):
        rows.append([
            int(rng.integers(1, 4)),
            proto_draw(2), proto_draw(2), proto_draw(1), 2,
        ])
    for _ in range(30):
        vals = [int(rng.integers(1, 4)) for _ in range(3)]
        fours = [i for i in range(3) if rng.random() < 0.45]
        if not fours:
            fours = [int(rng.integers(0, 3))]
        for i in fours:
            vals[i] = 4
        rows.append([int(rng.integers(1, 4))] + vals + [3])
    order = rng.permutation(len(rows))
    rows = [rows[i] for i in order]
    write_csv(
        "hayes_roth.csv",
        ["hobby", "age", "education", "marital", "class"],
        rows,
    )


# --------------------------------------------------------------------------
# Caesarian: 80 samples, 4 categorical attributes, 2 classes (34 non-
# caesarian / 46 caesarian). Weak class signal through heart problems,
# abnormal blood pressure and non-timely delivery.


def build_caesarian(rng):
    def draw(cls):
        if cls == 1:
            heart = int(rng.random() < 0.42)
            bp = int(rng.choice([0, 1, 2], p=[0.28, 0.42, 0.30]))
            dtime = int(rng.choice([0, 1, 2], p=[0.55, 0.28, 0.17]))
            dnum = int(rng.choice([1, 2, 3, 4], p=[0.44, 0.32, 0.16, 0.08]))
        else:
            heart = int(rng.random() < 0.15)
            bp = int(rng.choice([0, 1, 2], p=[0.15, 0.65, 0.20]))
            dtime = int(rng.choice([0, 1, 2], p=[0.75, 0.15, 0.10]))
            dnum = int(rng.choice([1, 2, 3, 4], p=[0.38, 0.38, 0.18, 0.06]))
        return [dnum, dtime, bp, heart, cls]

    rows = [draw(0) for _ in range(34)] + [draw(1) for _ in range(46)]
    order = rng.permutation(len(rows))
    rows = [rows[i] for i in order]
    write_csv(
        "caesarian.csv",
        ["delivery_number", "delivery_time", "blood_pressure",
         "heart_problem", "class"],
        rows,
    )


def build_suite_manifest():
    suite = {
        "format": "coforest.suite",
        "version": 1,
        "datasets": [
            {"name": "soybean_small", "path": "soybean_small.csv",
             "label_column": "class", "k_star": 4, "missing_token": "?"},
            {"name": "zoo", "path": "zoo.csv",
             "label_column": "class", "k_star": 7, "missing_token": "?"},
            {"name": "lenses", "path": "lenses.csv",
             "label_column": "class", "k_star": 3, "missing_token": "?"},
            {"name": "hayes_roth", "path": "hayes_roth.csv",
             "label_column": "class", "k_star": 3, "missing_token": "?"},
            {"name": "caesarian", "path": "caesarian.csv",
             "label_column": "class", "k_star": 2, "missing_token": "?"},
        ],
    }
    path = os.path.join(OUT, "suite.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(suite, fh, indent=2)
    print(f"wrote {path}")


def main():
    os.makedirs(OUT, exist_ok=True)
    rng = np.random.default_rng(173201)
    build_lenses()
    build_zoo()
    build_soybean(rng)
    build_hayes_roth(rng)
    build_caesarian(rng)
    build_suite_manifest()


if __name__ == "__main__":
    main()
