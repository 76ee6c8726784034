#!/usr/bin/env python3
#
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
#
"""Builds full-period letter pools around the sample corpora.

ceecNN-pool.jsonl holds every letter of ceecNN.jsonl plus background letters
by the same writers, so that a sample can be drawn from it. Background text
never uses a form that the decision logs or the lexicon refer to.

Usage: python3 generate_pool.py [--factor 11] [--seed 1642]
"""

import argparse
import json
import os
import random
from collections import Counter
from itertools import accumulate

import generate as gen

HERE = os.path.dirname(os.path.abspath(__file__))


def read_jsonl(path):
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def reserved_forms():
    out = set()
    for e in read_jsonl(os.path.join(HERE, "oed-mini.jsonl")):
        out.add(e["lemma"].lower())
        out.update(v.lower() for v in e["variants"])
    for c in (17, 18):
        for d in read_jsonl(os.path.join(HERE, f"decisions{c}.jsonl")):
            out.add(d["candidate_key"]["form"])
    return out


def build(century, factor, rng, fresh_vocab, fresh_weights, reserved):
    rows = read_jsonl(os.path.join(HERE, f"ceec{century}.jsonl"))
    persons = [r for r in rows if r["type"] == "person"]
    letters = [r for r in rows if r["type"] == "letter"]
    period = gen.SAMPLE_SIZES[century]["period"]

    # Background words come mostly from the sample's own unflagged forms and
    # partly from fresh pseudo-words, so the pool keeps producing new forms.
    counts = Counter()
    for l in letters:
        for t in l["tokens"]:
            if not t.get("f") and t["s"].lower() not in reserved:
                counts[t["s"]] += 1
    births = {p["id"]: p.get("birth_year") for p in persons}
    known = list(counts)
    known_cum = list(accumulate(counts[w] for w in known))
    fresh_cum = list(accumulate(fresh_weights))

    sample_words = sum(len(l["tokens"]) for l in letters)
    target = sample_words * (factor - 1)
    out_letters = []
    serial = Counter()
    added = 0
    while added < target:
        tmpl = rng.choice(letters)
        size = rng.randint(250, 800)
        words = []
        while len(words) < size:
            if rng.random() < 0.85:
                w = rng.choices(known, cum_weights=known_cum)[0]
            else:
                w = rng.choices(fresh_vocab, cum_weights=fresh_cum)[0]
            if w.lower() not in reserved:
                words.append(w)
        coll = tmpl["collection"]
        serial[coll] += 1
        out_letters.append({
            "type": "letter",
            "id": f"{coll}_P{century}{serial[coll]:04d}",
            "collection": coll,
            "year": rng.randint(max(period[0], (births[tmpl["sender"]] or 0) + 16),
                                period[1]),
            "sender": tmpl["sender"],
            "recipient": tmpl["recipient"],
            "relationship": tmpl["relationship"],
            "text": " ".join(words),
        })
        added += size
    all_letters = letters + out_letters
    all_letters.sort(key=lambda l: (l["year"], l["id"]))
    path = os.path.join(HERE, f"ceec{century}-pool.jsonl")
    gen.write_jsonl(path, persons + all_letters)
    print(f"{century}th c. pool: {len(all_letters)} letters, "
          f"{sample_words + added} words ({len(letters)} sample letters)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--factor", type=int, default=11)
    ap.add_argument("--seed", type=int, default=1642)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    reserved = reserved_forms()
    fresh_vocab, fresh_weights = gen.build_vocab(rng, reserved)
    fresh_vocab = fresh_vocab[len(gen.FUNCTION_WORDS):]
    fresh_weights = fresh_weights[len(gen.FUNCTION_WORDS):]
    for century in (17, 18):
        build(century, args.factor, rng, fresh_vocab, fresh_weights, reserved)


if __name__ == "__main__":
    main()
