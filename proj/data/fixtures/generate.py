#!/usr/bin/env python3
# Copyright 2026 The Neologia Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds the synthetic letter corpora, mini dictionary and decision logs.

The corpora are constructed so that running-word totals per social category
and the placement of verified neologism tokens reproduce fixed target
sample tables. Word and token counts per social cell
(rank x gender x relationship x age group) are found with a small integer
program; letters and filler text are then laid out around fixed anchor
letters. Output is deterministic for a given --seed.

Usage: generate.py [--out DIR] [--seed N]
"""

import argparse
import json
import os
import random
from collections import defaultdict

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

import lexicon_data as lx

GENDERS = ["male", "female"]
RANKS = ["royalty", "nobility", "gentry", "clergy", "professionals",
         "merchants", "other_non_gentry"]
RELS = ["nuclear_family", "other_family", "close_friends",
        "other_acquaintances"]
AGES = ["Y", "M", "O", "U"]  # <40, 40-49, >=50, unknown birth year

SAMPLE_SIZES = {
    17: {
        "period": (1640, 1660),
        "gender": {"male": 23459, "female": 12806},
        "rank": {"royalty": 3899, "nobility": 5038, "gentry": 11509,
                 "clergy": 9659, "professionals": 3675, "merchants": 860,
                 "other_non_gentry": 1625},
        "rel": {"nuclear_family": 15045, "other_family": 0,
                "close_friends": 7467, "other_acquaintances": 13753},
    },
    18: {
        "period": (1760, 1780),
        "gender": {"male": 29225, "female": 18639},
        "rank": {"royalty": 4067, "nobility": 6998, "gentry": 10924,
                 "clergy": 8976, "professionals": 10847, "merchants": 2496,
                 "other_non_gentry": 3556},
        "rel": {"nuclear_family": 12754, "other_family": 6534,
                "close_friends": 14771, "other_acquaintances": 13805},
    },
}

# Token marginals chosen so that round(tokens / words * 1e4) reproduces the
# target per-10k integers (see tests/oracles for the search).
TOKENS = {
    17: {
        "gender": {"male": 39, "female": 14},
        "rank": {"royalty": 10, "nobility": 8, "gentry": 15, "clergy": 11,
                 "professionals": 9, "merchants": 0, "other_non_gentry": 0},
        "rel": {"nuclear_family": 9, "other_family": 0, "close_friends": 19,
                "other_acquaintances": 25},
    },
    18: {
        "gender": {"male": 14, "female": 7},
        "rank": {"royalty": 0, "nobility": 3, "gentry": 3, "clergy": 6,
                 "professionals": 4, "merchants": 0, "other_non_gentry": 5},
        "rel": {"nuclear_family": 6, "other_family": 2, "close_friends": 11,
                "other_acquaintances": 2},
    },
}

# Per-10k windows on age groups: (groups, lo, hi).
AGE_TARGETS = {
    17: [(("M", "O"), 20.6, 21.4), (("Y",), 9.6, 10.4),
         (("O",), 17.6, 18.4), (("Y", "M"), 14.6, 15.4)],
    18: [(("Y",), 4.6, 5.4), (("M", "O"), 3.6, 4.4)],
}


def age_group(birth, year):
    if birth is None:
        return "U"
    age = year - birth
    if age < 40:
        return "Y"
    if age < 50:
        return "M"
    return "O"


class Anchor:
    """A named writer with fixed letters carrying fixed neologism forms."""

    def __init__(self, pid, name, gender, rank, birth, letters, region=None):
        self.pid = pid
        self.name = name
        self.gender = gender
        self.rank = rank
        self.birth = birth
        self.region = region
        # (letter_id, collection, year, recipient_id, rel, words, forms, lead)
        self.letters = letters


def L(lid, year, recipient, rel, words, forms, lead=""):
    return (lid, lid.split("_")[0], year, recipient, rel, words, forms, lead)


# Forms map to (lemma, pos); "edited" marks a reviewer edit rather than an
# accepted rank-1 suggestion.
ANCHORS_17 = [
    Anchor("thoward", "Thomas Howard, Earl of Arundel", "male", "nobility", 1585, [
        L("ARUNDEL_068", 1641, "jpennington", "other_acquaintances", 420,
          [("Packette", "packet-boat", "edited")],
          "may instantly passe to Dunkerke for her especiall service wch depends "
          "soe much upon it as upon his retorne or any others sent before by ye "
          "Packette Boate"),
    ], region="abroad"),
    Anchor("whoward", "William Howard, Viscount Stafford", "male", "nobility", 1614, [
        L("ARUNDEL_072", 1642, "thoward", "nuclear_family", 380,
          [("statement", "statement", "accepted")],
          "I have receaved onely one letter in which there is a statement that "
          "the ssouldiers went to his house and ransaked it totally"),
        L("ARUNDEL_074", 1643, "ahoward", "nuclear_family", 360,
          [("tee", "tea", "accepted")],
          "I have scarce bought any thinge for my selfe but an Indian Brewhouse "
          "for tee , which hath beene very good Black Lack worke"),
    ], region="abroad"),
    Anchor("percival", "Sir Anthony Percival", "male", "gentry", None, [
        L("OXINDE_186", 1643, "hoxinden", "other_acquaintances", 450,
          [("Malignencye", "malignancy", "accepted")],
          "it was uppon reall considerations such as will appeare good if lawe "
          "have any being and being cloathed with the garment of Malignencye "
          "and therfore in a suffring condition"),
    ]),
    Anchor("harrison", "Thomas Harrison", "male", "professionals", 1616, [
        L("JONES_040", 1656, "jjones", "close_friends", 520,
          [("believingly", "believingly", "accepted"),
           ("condisention", "condescension", "accepted")],
          "and David in the spirit followed that faithfully believingly "
          "undoubtingly unanimously and soe witnes repentance by condisention"),
        L("JONES_041", 1657, "jjones", "close_friends", 600,
          [("endeared", "endeared", "accepted"), ("hint", "hint", "accepted"),
           ("variously", "variously", "accepted")]),
        L("JONES_043", 1658, "jjones", "close_friends", 560,
          [("beleevingly", "believingly", "accepted"),
           ("endeered", "endeared", "accepted"),
           ("variouslie", "variously", "accepted")]),
    ]),
    Anchor("dixwell", "John Dixwell", "male", "professionals", 1607, [
        L("DIXWELL_003", 1651, "rgenerall", "other_acquaintances", 400,
          [("sequestrator", "sequestrator", "accepted")]),
    ]),
    Anchor("conway", "Lady Anne Conway", "female", "nobility", 1631, [
        L("CONWAY_093", 1651, "hmore", "close_friends", 620,
          [("eidolum", "idolum", "accepted")],
          "then why does not everything we Looke upon yeeld the eidolum or "
          "representation of something else"),
    ]),
    Anchor("lestrange", "Sir Hamon L'Estrange", "male", "gentry", 1583, [
        L("BROWNE_011", 1653, "tbrowne", "other_acquaintances", 900,
          [("acrimonious", "acrimonious", "accepted"),
           ("oversweetness", "oversweetness", "accepted"),
           ("manifesto", "manifesto", "accepted"),
           ("crawlinge", "crawling", "accepted"),
           ("candour", "candour", "accepted")]),
    ]),
    Anchor("charles", "Charles I", "male", "royalty", 1600, [
        L("CHARLES_012", 1645, "rgenerall", "other_acquaintances", 480,
          [("dragooner", "dragooner", "accepted"),
           ("dishearten", "dishearten", "accepted")]),
        L("CHARLES_015", 1646, "rgenerall", "other_acquaintances", 420,
          [("disharten", "dishearten", "accepted")]),
    ]),
    Anchor("estuart", "Elizabeth Stuart, Queen of Bohemia", "female", "royalty", 1596, [
        L("ROE_101", 1641, "troe", "other_acquaintances", 560,
          [("visits", "visit", "accepted"), ("incognito", "incognito", "accepted"),
           ("servients", "servient", "accepted")]),
        L("ROE_104", 1643, "troe", "other_acquaintances", 540,
          [("landgravines", "landgravine", "accepted"),
           ("plenipotentiaries", "plenipotentiary", "accepted")]),
        L("ROE_108", 1645, "troe", "other_acquaintances", 520,
          [("swedes", "Swede", "accepted"),
           ("plenipotentiarie", "plenipotentiary", "accepted")]),
    ], region="abroad"),
    Anchor("harley", "Lady Brilliana Harley", "female", "gentry", 1598, [
        L("HARLEY_021", 1642, "eharley", "nuclear_family", 480,
          [("incendiaries", "incendiary", "accepted")]),
    ]),
]

# Remaining 17th-century types, with the six that occur twice.
FREE_FORMS_17 = [
    ("candid", "candid"), ("causallie", "causally"), ("compensate", "compensate"),
    ("compliance", "compliance"), ("complyance", "compliance"),
    ("coney-ground", "coney ground"), ("congregational", "congregational"),
    ("covenanting", "covenanting"), ("efficaciously", "efficaciously"),
    ("eminently", "eminently"), ("eminentlie", "eminently"),
    ("entanglement", "entanglement"), ("intanglement", "entanglement"),
    ("helpfulness", "helpfulness"), ("initiatory", "initiatory"),
    ("joke", "joke"), ("joak", "joke"), ("remind", "remind"), ("remynd", "remind"),
    ("rickets", "rickets"), ("rickettes", "rickets"), ("vibrate", "vibrate"),
    ("voluminous", "voluminous"),
]
FREE_CELLS_17 = {("nobility", "male"): 4, ("gentry", "male"): 8,
                 ("clergy", "male"): 6, ("clergy", "female"): 5}

ANCHORS_18 = [
    Anchor("barnes", "Henry Barnes", "male", "other_non_gentry", None, [
        L("FOUNDLI_126", 1762, "eleicester", "other_acquaintances", 380,
          [("fondlen", "foundling-house", "edited")],
          "For the meatrern of the fondlen house"),
    ]),
    Anchor("sancho", "Ignatius Sancho", "male", "other_non_gentry", 1729, [
        L("SANCHO_016", 1777, "wstevenson", "close_friends", 900,
          [("andrew-like", "merry-Andrew-like", "edited"),
           ("blacky", "blacky", "accepted"), ("lovee", "lovee", "accepted"),
           ("namby-pamby", "namby-pamby", "accepted")],
          "Your invocation has mounted me Merry Andrew-like upon stilts I ape "
          "you as monkeys ape men by walking upon two"),
    ]),
    Anchor("colton", "Mary Colton", "female", "clergy", None, [
        L("FOUNDLI_140", 1768, "eleicester", "other_acquaintances", 420,
          [("inspectress", "inspectress", "accepted")]),
    ]),
    Anchor("lennox", "Lady Sarah Lennox", "female", "gentry", 1745, [
        L("OBRIEN_022", 1766, "sobrien", "close_friends", 520,
          [("funny", "funny", "accepted")]),
    ]),
    Anchor("thrale", "Hester Lynch Thrale", "female", "gentry", 1741, [
        L("BURNEY_031", 1779, "fburney", "close_friends", 560,
          [("dénouement", "dénouement", "accepted")]),
    ]),
    Anchor("burney", "Frances Burney", "female", "professionals", 1752, [
        L("CRISP_007", 1778, "scrisp", "close_friends", 880,
          [("anecdote-monger", "anecdote-monger", "accepted"),
           ("interference", "interference", "accepted")]),
    ]),
    Anchor("boddam", "Mary Rawson Hart Boddam", "female", "professionals", 1744, [
        L("DRAPER_002", 1760, "tpickering", "other_family", 640,
          [("hooka", "hookah", "accepted"), ("cream-cann", "cream-can", "accepted")],
          "and will suck a Hubble Bubble draw a Ailloon smoak a hooka or "
          "cream-cann with you if you please"),
    ], region="abroad"),
    Anchor("twining", "Thomas Twining", "male", "clergy", 1735, [
        L("TWINING_005", 1764, "dtwining", "nuclear_family", 1100,
          [("pudding-less", "puddingless", "accepted"),
           ("floreat", "floreat", "accepted"), ("jumpable", "jumpable", "accepted")],
          "the vanquished shall be pudding-less for two days & not have three "
          "puddings for it on the third"),
        L("TWINING_009", 1766, "dtwining", "nuclear_family", 900,
          [("moonery", "moonery", "accepted"), ("tittup", "tittup", "accepted")]),
    ]),
    Anchor("newdigate", "Sir Roger Newdigate", "male", "gentry", 1719, [
        L("NEWDIGATE_044", 1773, "snewdigate", "nuclear_family", 700,
          [("miliary", "miliary fever", "edited")]),
    ]),
    Anchor("walpole", "Horace Walpole", "male", "nobility", 1717, [
        L("GRAY_065", 1768, "tgray", "close_friends", 760,
          [("sentimental", "sentimental", "accepted"),
           ("mooning", "mooning", "accepted"),
           ("lumber-room", "lumber-room", "accepted")],
          "I think you will like Sterne's sentimental travels which tho often "
          "tiresome are exceedingly goodnatured & picturesque"),
    ]),
]

RECIPIENTS = {
    "jpennington": ("Sir John Pennington", "male", "gentry"),
    "ahoward": ("Aletheia Howard", "female", "nobility"),
    "hoxinden": ("Henry Oxinden", "male", "gentry"),
    "jjones": ("John Jones", "male", "gentry"),
    "rgenerall": ("A General Officer", "male", "unknown"),
    "hmore": ("Henry More", "male", "clergy"),
    "tbrowne": ("Thomas Browne", "male", "professionals"),
    "troe": ("Sir Thomas Roe", "male", "gentry"),
    "eharley": ("Edward Harley", "male", "gentry"),
    "eleicester": ("Elizabeth Leicester", "female", "other_non_gentry"),
    "wstevenson": ("William Stevenson", "male", "unknown"),
    "sobrien": ("Lady Susan O'Brien", "female", "nobility"),
    "fburney": ("Frances Burney", "female", "professionals"),
    "scrisp": ("Samuel Crisp", "male", "gentry"),
    "tpickering": ("Thomas Pickering", "male", "unknown"),
    "dtwining": ("Daniel Twining", "male", "other_non_gentry"),
    "snewdigate": ("Sophia Newdigate", "female", "gentry"),
    "tgray": ("Thomas Gray", "male", "professionals"),
}

FUNCTION_WORDS = (
    "the and of to that I in it is you your be my not for with as which "
    "have this but will he his by so me all at from or what are they this "
    "them we our if shall would was there hath him had no when doe soe "
    "much any upon may can more very good great some now then being letter "
    "yr yt wth onely selfe hope well againe beene here such must make know "
    "time desire pray one those who other here love doubt wee therefore "
    "wherein thinke write thence heare sir madam lord last lett nott till "
    "whome could also giue haue vs vnto ye euer neuer owne deare mee"
).split()

SYLLABLES = (
    "ab ac ad al am an ar as at ba be bi bo bu ca ce ci co cu da de di do "
    "du fa fe fi fo ga ge gi go ha he hi ho la le li lo lu ma me mi mo mu "
    "na ne ni no nu pa pe pi po pu ra re ri ro ru sa se si so su ta te ti "
    "to tu va ve vi wa we wi ya ye"
).split()
ENDINGS = ["", "", "e", "ed", "es", "ing", "nes", "ly", "th", "ge", "nt", "ce"]

PROPER = ("London Oxford Yorke Kent Dover Bristol Antwerp Paris Hague Iohn "
          "Thomas William Henry Mary Anne Elizabeth Charles Robert Ned Betty "
          "Whitehall Parliament Hampton Bath").split()
LEAD_PROPER = {"Indian", "Dunkerke", "David", "Sterne's", "Hubble", "Bubble",
               "Ailloon", "Black", "Lack"}
FOREIGN = "ibid viz caetera gratia deo nihil bona fide item".split()
ABBREV = "Mr Mrs Sr Ld Dr Capt Col wch yt".split()


def build_vocab(rng, forbidden):
    words = []
    seen = set(forbidden) | set(w.lower() for w in FUNCTION_WORDS)
    while len(words) < 5200:
        n = rng.choice([1, 2, 2, 3, 3, 4])
        w = "".join(rng.choice(SYLLABLES) for _ in range(n)) + rng.choice(ENDINGS)
        if len(w) < 3 or w in seen:
            continue
        seen.add(w)
        words.append(w)
    vocab = FUNCTION_WORDS + words
    weights = [1.0 / (i + 1) ** 1.05 for i in range(len(vocab))]
    return vocab, weights


def solve_cells(century, anchors, free_cells):
    t1 = SAMPLE_SIZES[century]
    tm = TOKENS[century]
    cells = [(r, g, rel, a) for r in RANKS for g in GENDERS for rel in RELS
             for a in AGES]
    n = len(cells)
    idx = {c: i for i, c in enumerate(cells)}
    # x = [w (n), t (n), z (n), d (n)]; d is |w - prior| for the objective.
    nv = 4 * n
    W, T, Z, D = 0, n, 2 * n, 3 * n

    anchor_w = defaultdict(int)
    anchor_t = defaultdict(int)
    for a in anchors:
        for (lid, coll, year, rcp, rel, words, forms, lead) in a.letters:
            c = (a.rank, a.gender, rel, age_group(a.birth, year))
            anchor_w[c] += words
            anchor_t[c] += len(forms)

    anchored = set(anchor_w)
    rows, lo, hi = [], [], []

    def add(coefs, l, h):
        row = np.zeros(nv)
        for j, v in coefs:
            row[j] += v
        rows.append(row)
        lo.append(l)
        hi.append(h)

    for g in GENDERS:
        add([(W + idx[c], 1) for c in cells if c[1] == g], t1["gender"][g], t1["gender"][g])
        add([(T + idx[c], 1) for c in cells if c[1] == g], tm["gender"][g], tm["gender"][g])
    for r in RANKS:
        add([(W + idx[c], 1) for c in cells if c[0] == r], t1["rank"][r], t1["rank"][r])
        add([(T + idx[c], 1) for c in cells if c[0] == r], tm["rank"][r], tm["rank"][r])
    for rel in RELS:
        add([(W + idx[c], 1) for c in cells if c[2] == rel], t1["rel"][rel], t1["rel"][rel])
        add([(T + idx[c], 1) for c in cells if c[2] == rel], tm["rel"][rel], tm["rel"][rel])
    for groups, rlo, rhi in AGE_TARGETS[century]:
        sel = [c for c in cells if c[3] in groups]
        add([(T + idx[c], 1e4) for c in sel] + [(W + idx[c], -rlo) for c in sel], 0, np.inf)
        add([(T + idx[c], 1e4) for c in sel] + [(W + idx[c], -rhi) for c in sel], -np.inf, 0)

    total = sum(t1["gender"].values())
    lb = np.zeros(nv)
    ub = np.full(nv, np.inf)
    for c in cells:
        i = idx[c]
        r, g, rel, a = c
        # Token density and occupancy.
        # Free tokens need filler letters of their own.
        add([(W + i, 1), (T + i, -150)], anchor_w[c] - 150 * anchor_t[c], np.inf)
        add([(W + i, 1), (Z + i, -400)], 0, np.inf)
        add([(W + i, 1), (Z + i, -total)], -np.inf, 0)
        lb[W + i] = anchor_w[c]
        lb[T + i] = anchor_t[c]
        ub[Z + i] = 1
        if (r, g) not in free_cells:
            ub[T + i] = anchor_t[c]
        if a == "U" and c not in anchored:
            ub[W + i] = 0
        # Prior: independence of axes, age spread Y/M/O = .4/.3/.3.
        age_share = {"Y": 0.4, "M": 0.3, "O": 0.3, "U": 0.0}[a]
        prior = (t1["gender"][g] / total) * (t1["rank"][r] / total) * \
            (t1["rel"][rel] / total) * age_share * total
        add([(D + i, 1), (W + i, -1)], -prior, np.inf)
        add([(D + i, 1), (W + i, 1)], prior, np.inf)
    # Keep the unknown-age share modest.
    add([(W + idx[c], 1) for c in cells if c[3] == "U"], 0, 0.08 * total)

    cost = np.zeros(nv)
    cost[D:D + n] = 1.0
    cost[Z:Z + n] = 50.0
    integrality = np.ones(nv)
    integrality[D:D + n] = 0
    res = milp(cost, constraints=LinearConstraint(np.array(rows), lo, hi),
               integrality=integrality, bounds=Bounds(lb, ub),
               options={"time_limit": 45})
    if res.x is None:
        raise SystemExit(f"{century}th c.: cell program infeasible: {res.message}")
    x = np.round(res.x).astype(int)
    out = {}
    for c in cells:
        w, t = x[W + idx[c]], x[T + idx[c]]
        if w > 0:
            out[c] = (int(w), int(t), anchor_w[c], anchor_t[c])
    return out


def split_words(total, rng):
    """Splits `total` words into letters of 250..800 words."""
    sizes = []
    left = total
    while left > 0:
        if left <= 800:
            sizes.append(left)
            break
        s = rng.randint(250, 800)
        if left - s < 250:
            s = left - 250 if left - 250 >= 250 else left
        sizes.append(s)
        left -= s
    return sizes


def birth_for(group, period, rng):
    lo, hi = period
    while True:
        if group == "Y":
            b = rng.randint(lo - 39, hi - 17)
            yl, yh = max(lo, b + 17), min(hi, b + 39)
        elif group == "M":
            b = rng.randint(lo - 49, hi - 40)
            yl, yh = max(lo, b + 40), min(hi, b + 49)
        else:
            b = rng.randint(lo - 72, hi - 50)
            yl, yh = max(lo, b + 50), min(hi, b + 72)
        if yl <= yh:
            return b, (yl, yh)


FIRST = {"male": "John Richard Francis Edward Nicholas George Robert Ralph Humphrey "
                 "Walter Samuel Henry Thomas Philip Edmund James Roger Arthur".split(),
         "female": "Anne Katherine Margaret Dorothy Frances Jane Lucy Elizabeth "
                   "Mary Susanna Bridget Alice Hester Martha Sarah Judith".split()}
SURNAMES = ("Verney Paston Hatton Bagot Cornwallis Oxinden Basire Clifford Hutton "
            "Pepys Wentworth Conyers Lister Barrington Gawdy Stockton Osborne Hobart "
            "Knyvett Meautys Fleming Holles Jeake Cosin Hoby Marescoe Herbert Tixall "
            "Aston Wykeham Pelham Thornton Strode Spencer Moore Savile Tufton").split()


def generate_century(century, anchors, free_forms, free_cells, rng, vocab, weights):
    period = SAMPLE_SIZES[century]["period"]
    cells = solve_cells(century, anchors, free_cells)

    persons = {}
    letters = []
    rel_key = {}

    def add_person(pid, name, gender, rank, birth=None, region=None):
        rec = {"type": "person", "id": pid, "name": name, "gender": gender, "rank": rank}
        if birth is not None:
            rec["birth_year"] = birth
        if region:
            rec["region"] = region
        persons[pid] = rec

    for rid, (name, g, r) in RECIPIENTS.items():
        add_person(rid, name, g, r)
    generic_recipients = []
    for i in range(24):
        g = GENDERS[i % 2]
        pid = f"rcpt{century}_{i:02d}"
        add_person(pid, f"{rng.choice(FIRST[g])} {rng.choice(SURNAMES)}", g, "unknown")
        generic_recipients.append(pid)

    planned = []  # (letter dict without text, forms list, lead)
    for a in anchors:
        add_person(a.pid, a.name, a.gender, a.rank, a.birth, a.region)
        for (lid, coll, year, rcp, rel, words, forms, lead) in a.letters:
            planned.append({"id": lid, "collection": coll, "year": year,
                            "sender": a.pid, "recipient": rcp, "relationship": rel,
                            "words": words, "forms": list(forms), "lead": lead})

    # Filler writers per (rank, gender, age group).
    fillers = {}
    counter = [0]
    collections = ("VERNEY HATTON BAGOT CORNWAL PASTON HUTTON BASIRE CLIFFORD "
                   "WENTWORTH LISTER GAWDY OSBORNE FLEMING HOLLES HOBY ASTON").split()

    def filler_for(r, g, a):
        key = (r, g, a)
        if key not in fillers:
            fillers[key] = []
        pool = fillers[key]
        if len(pool) < 3:
            counter[0] += 1
            pid = f"w{century}_{counter[0]:03d}"
            birth, years = (None, period) if a == "U" else birth_for(a, period, rng)
            name = f"{rng.choice(FIRST[g])} {rng.choice(SURNAMES)}"
            add_person(pid, name, g, r, birth)
            pool.append((pid, years, rng.choice(collections)))
        return rng.choice(pool)

    free_queue = list(free_forms)
    rng.shuffle(free_queue)
    letter_serial = defaultdict(int)
    for c in sorted(cells):
        r, g, rel, a = c
        w, t, aw, at = cells[c]
        rest_w, rest_t = w - aw, t - at
        if rest_w == 0:
            assert rest_t == 0, c
            continue
        sizes = split_words(rest_w, rng)
        slots = [[] for _ in sizes]
        for k in range(rest_t):
            slots[k % len(sizes)].append(free_queue.pop())
        for size, forms in zip(sizes, slots):
            pid, years, coll = filler_for(r, g, a)
            letter_serial[coll] += 1
            lid = f"{coll}_{century}{letter_serial[coll]:03d}"
            planned.append({"id": lid, "collection": coll,
                            "year": rng.randint(*years), "sender": pid,
                            "recipient": rng.choice(generic_recipients),
                            "relationship": rel, "words": size,
                            "forms": [(f, lemma, "accepted") for f, lemma in forms],
                            "lead": ""})
    assert not free_queue, free_queue

    # Text: neologism forms must be first appearances, so they are excluded
    # from the filler vocabulary entirely.
    for p in planned:
        toks = []
        lead = p["lead"].split() if p["lead"] else []
        for wtok in lead:
            flags = []
            if wtok in LEAD_PROPER:
                flags = ["proper_noun"]
            elif wtok in ("wch", "ye"):
                flags = ["abbreviation"]
            toks.append((wtok, flags))
        present = {t[0] for t in toks}
        need = [f for f, _, _ in p["forms"] if f not in present]
        n_fill = p["words"] - len(toks) - len(need)
        assert n_fill >= 0, p["id"]
        fill = rng.choices(vocab, weights=weights, k=n_fill)
        body = []
        for wtok in fill:
            x = rng.random()
            if x < 0.02:
                body.append((rng.choice(PROPER), ["proper_noun"]))
            elif x < 0.025:
                body.append((rng.choice(FOREIGN), ["foreign"]))
            elif x < 0.032:
                body.append((rng.choice(ABBREV), ["abbreviation"]))
            elif x < 0.034:
                body.append(("sic", ["editorial"]))
            else:
                body.append((wtok.capitalize() if rng.random() < 0.03 else wtok, []))
        for f in need:
            body.insert(rng.randint(0, len(body)), (f, []))
        toks.extend(body)
        assert len(toks) == p["words"], (p["id"], len(toks), p["words"])
        out_toks = []
        off = 0
        for s, flags in toks:
            rec = {"s": s, "o": off}
            if flags:
                rec["f"] = flags
            out_toks.append(rec)
            off += len(s) + 1
        p["tokens"] = out_toks

    planned.sort(key=lambda p: (p["year"], p["id"]))
    ids = [p["id"] for p in planned]
    assert len(ids) == len(set(ids))
    return persons, planned, cells


def check_first_appearances(planned):
    seen = set()
    owner = {}
    for p in planned:
        for t in p["tokens"]:
            if t.get("f"):
                continue
            f = t["s"].lower()
            if f not in seen:
                seen.add(f)
                owner[f] = p["id"]
    for p in planned:
        for f, _, _ in p["forms"]:
            assert owner.get(f.lower()) == p["id"], (f, p["id"], owner.get(f.lower()))
    return owner


def place_no_entry(planned, forms, rng, owner):
    """Inserts dictionary-less forms by replacing filler tokens."""
    placed = []
    cands = [p for p in planned if not p["forms"]]
    for f in forms:
        p = rng.choice(cands)
        toks = p["tokens"]
        while True:
            j = rng.randrange(len(toks))
            s = toks[j]["s"].lower()
            # Only replace tokens whose form recurs and is not owned here.
            if not toks[j].get("f") and owner.get(s) != p["id"]:
                break
        toks[j] = {"s": f, "o": 0}
        placed.append((f, p["id"]))
    for p in planned:
        off = 0
        for t in p["tokens"]:
            t["o"] = off
            off += len(t["s"]) + 1
    return placed


def make_lexicon(rows, planned, antedated, rng):
    years = defaultdict(list)
    for p in planned:
        for f, lemma, _ in p["forms"]:
            years[lemma].append(p["year"])
    entries = []
    for lemma, pos, kind, lang, path, gloss, variants in rows:
        ys = years[lemma]
        assert ys, lemma
        lo, hi = min(ys), max(ys)
        if (lemma, pos) in lx.FIXED_ATTESTATION:
            att = lx.FIXED_ATTESTATION[(lemma, pos)]
        elif lemma in antedated:
            att = hi + rng.randint(1, 25)
        else:
            att = rng.randint(hi - 40, lo)
        if lemma in antedated:
            assert att > hi, lemma
        else:
            assert hi - 40 <= att <= lo, lemma
        key = lemma.lower().replace(" ", "-")
        senses = [{"sense_id": f"{key}.{pos[0]}.1", "gloss": gloss,
                   "first_attestation_year": att, "ht_path": path}]
        if (lemma, pos) in lx.OLDER_SENSES:
            g2, y2, p2 = lx.OLDER_SENSES[(lemma, pos)]
            senses.insert(0, {"sense_id": f"{key}.{pos[0]}.0", "gloss": g2,
                              "first_attestation_year": y2, "ht_path": p2})
        ety = {"kind": kind}
        if lang:
            ety["source_language"] = lang
        vs = [lemma.lower()] + [v for v in variants if v != lemma.lower()]
        entries.append({"lemma": lemma, "pos": pos, "variants": vs,
                        "etymology": ety, "senses": senses})
    return entries


def sense_for(entry):
    return entry["senses"][-1]["sense_id"]


def make_log(planned, lexicon, no_entry, reviewer, t0, rng, owner):
    by_lemma = {e["lemma"]: e for e in lexicon}
    log = []
    clock = [t0]

    def stamp():
        clock[0] += rng.randint(20, 400)
        s = clock[0]
        day = 1 + s // 86400
        hh, mm, ss = (s // 3600) % 24, (s // 60) % 60, s % 60
        return f"2021-02-{day:02d}T{hh:02d}:{mm:02d}:{ss:02d}Z"

    def decision(form, lid, status, lemma=None):
        d = {"candidate_key": {"form": form.lower(), "letter_id": lid},
             "status": status, "reviewer": reviewer, "timestamp": stamp()}
        if lemma is not None:
            e = by_lemma[lemma]
            d["entry"] = {"lemma": e["lemma"], "pos": e["pos"]}
            d["sense_id"] = sense_for(e)
        return d

    accepts = []
    for p in planned:
        for f, lemma, status in p["forms"]:
            accepts.append(decision(f, p["id"], status, lemma))
    # A few superseded decisions: an early reject later overturned.
    for d in accepts[:3]:
        k = d["candidate_key"]
        log.append({"candidate_key": dict(k), "status": "rejected",
                    "reviewer": reviewer, "timestamp": stamp()})
    log.extend(accepts)
    for f, lid in no_entry:
        log.append(decision(f, lid, "no_entry"))
    # Rejections of ordinary filler candidates, one flip-flopped.
    decided = {x.lower() for p in planned for x, _, _ in p["forms"]}
    decided.update(f for f, _ in no_entry)
    fill = sorted((f, lid) for f, lid in owner.items() if f not in decided)
    for f, lid in rng.sample(fill, 12):
        log.append(decision(f, lid, "rejected"))
    f, lid = fill[0]
    log.append(decision(f, lid, "accepted", lexicon[0]["lemma"]))
    log.append(decision(f, lid, "rejected"))
    return log


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for r in rows:
            fh.write(json.dumps(r, ensure_ascii=False, separators=(",", ":")) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.dirname(os.path.abspath(__file__)))
    ap.add_argument("--seed", type=int, default=1641)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    forbidden = set()
    for rows in (lx.C17, lx.C18):
        for lemma, pos, kind, lang, path, gloss, variants in rows:
            forbidden.add(lemma.lower())
            forbidden.update(v.lower() for v in variants)
    for a in ANCHORS_17 + ANCHORS_18:
        for l in a.letters:
            forbidden.update(f.lower() for f, _, _ in l[6])
            forbidden.update(w.lower() for w in l[7].split())
    forbidden.update(f for f, _ in FREE_FORMS_17)
    forbidden.update(lx.NO_ENTRY_17 + lx.NO_ENTRY_18)
    vocab, weights = build_vocab(rng, forbidden)

    lexicon = []
    logs = {}
    for century, anchors, free_forms, free_cells, rows, antedated, no_entry in (
            (17, ANCHORS_17, FREE_FORMS_17, FREE_CELLS_17, lx.C17, lx.ANTEDATED_17, lx.NO_ENTRY_17),
            (18, ANCHORS_18, [], {}, lx.C18, lx.ANTEDATED_18, lx.NO_ENTRY_18)):
        persons, planned, cells = generate_century(
            century, anchors, free_forms, free_cells, rng, vocab, weights)
        owner = check_first_appearances(planned)
        placed = place_no_entry(planned, no_entry, rng, owner)
        owner = check_first_appearances(planned)
        for f, lid in placed:
            assert owner[f] == lid, (f, lid)
        entries = make_lexicon(rows, planned, antedated, rng)
        lexicon.extend(entries)
        logs[century] = make_log(planned, entries, placed,
                                 "ts" if century == 17 else "jk",
                                 0 if century == 17 else 10 * 86400, rng, owner)
        out = list(persons.values())
        for p in planned:
            out.append({"type": "letter", "id": p["id"], "collection": p["collection"],
                        "year": p["year"], "sender": p["sender"],
                        "recipient": p["recipient"], "relationship": p["relationship"],
                        "tokens": p["tokens"]})
        write_jsonl(os.path.join(args.out, f"ceec{century}.jsonl"), out)
        write_jsonl(os.path.join(args.out, f"decisions{century}.jsonl"), logs[century])
        total = sum(len(p["tokens"]) for p in planned)
        print(f"{century}th c.: {len(planned)} letters, {total} words, "
              f"{sum(len(p['forms']) for p in planned)} neologism tokens, "
              f"{len(cells)} occupied cells")
    write_jsonl(os.path.join(args.out, "oed-mini.jsonl"), lexicon)
    print(f"lexicon: {len(lexicon)} entries")


if __name__ == "__main__":
    main()
