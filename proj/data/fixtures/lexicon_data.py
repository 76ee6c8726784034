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

"""Word-type tables for the mini dictionary fixture.

Each row: lemma, pos, etymology kind, source language, HT path, gloss,
extra spelling variants. Attestation years are filled in by the generator
once letter years are known (fixed years are listed in FIXED_ATTESTATION).
"""

# fmt: off
C17 = [
    ("acrimonious",     "adjective", "borrowing",   "Latin",   ["the world", "health and disease"], "bitter, irritating to the body", []),
    ("believingly",     "adverb",    "derivation",  None,      ["the mind", "attention and judgement"], "with belief", ["beleevingly"]),
    ("candid",          "adjective", "borrowing",   "French",  ["the mind", "goodness and badness"], "free from malice", []),
    ("candour",         "noun",      "borrowing",   "Latin",   ["the mind", "emotion"], "freedom from malice; kindliness", ["candor"]),
    ("causally",        "adverb",    "derivation",  None,      ["the mind", "mental capacity"], "as a cause", ["causallie"]),
    ("compensate",      "verb",      "borrowing",   "Latin",   ["the world", "action or operation"], "to make amends", []),
    ("compliance",      "noun",      "derivation",  None,      ["society", "morality"], "acting in accordance with a wish", ["complyance"]),
    ("condescension",   "noun",      "borrowing",   "Latin",   ["the mind", "attention and judgement"], "voluntary abnegation for the sake of another", ["condescention"]),
    ("coney ground",    "noun",      "compounding", None,      ["the world", "animals"], "ground frequented by rabbits", ["coney-ground", "cony-ground"]),
    ("congregational",  "adjective", "derivation",  None,      ["society", "faith"], "of a congregation", []),
    ("covenanting",     "adjective", "derivation",  None,      ["society", "faith"], "adhering to the Covenant", []),
    ("crawling",        "noun",      "derivation",  None,      ["the world", "movement"], "slow or laborious progress", ["crawlinge"]),
    ("dishearten",      "verb",      "derivation",  None,      ["the mind", "emotion"], "to discourage", ["disharten"]),
    ("dragooner",       "noun",      "derivation",  None,      ["society", "armed hostility", "warrior"], "a dragoon", []),
    ("efficaciously",   "adverb",    "derivation",  None,      ["the world", "action or operation"], "effectively", []),
    ("eminently",       "adverb",    "derivation",  None,      ["the world", "relative properties"], "in a high degree", ["eminentlie"]),
    ("endeared",        "adjective", "derivation",  None,      ["the mind", "emotion"], "made dear", ["endeered"]),
    ("entanglement",    "noun",      "derivation",  None,      ["the world", "relative properties"], "an intricate involvement", ["intanglement"]),
    ("helpfulness",     "noun",      "derivation",  None,      ["the world", "action or operation"], "the quality of being helpful", []),
    ("hint",            "verb",      "conversion",  None,      ["the mind", "mental capacity"], "to suggest indirectly", ["hinted"]),
    ("idolum",          "noun",      "borrowing",   "Latin",   ["the mind", "mental capacity"], "a mental image", ["eidolum"]),
    ("incendiary",      "noun",      "borrowing",   "Latin",   ["society", "authority"], "one who stirs up strife", ["incendiaries"]),
    ("incognito",       "adjective", "borrowing",   "Italian", ["society", "communication"], "with identity concealed", []),
    ("initiatory",      "adjective", "borrowing",   "Latin",   ["the world", "action or operation"], "introductory", []),
    ("joke",            "noun",      "unknown",     None,      ["society", "leisure"], "a jest", ["joak"]),
    ("landgravine",     "noun",      "borrowing",   "German",  ["society", "authority"], "wife of a landgrave", ["landgravines"]),
    ("malignancy",      "noun",      "borrowing",   "Latin",   ["society", "authority"], "political disaffection", ["malignancie"]),
    ("manifesto",       "noun",      "borrowing",   "Italian", ["society", "communication"], "a piece of evidence; a proof", []),
    ("oversweetness",   "noun",      "derivation",  None,      ["the world", "food and drink"], "excessive sweetness", []),
    ("packet-boat",     "noun",      "compounding", None,      ["society", "travel", "travel by water"], "a boat carrying mail", ["packet", "packette"]),
    ("plenipotentiary", "noun",      "borrowing",   "Latin",   ["society", "authority"], "an envoy with full powers", ["plenipotentiaries", "plenipotentiarie"]),
    ("remind",          "verb",      "derivation",  None,      ["the mind", "mental capacity"], "to cause to remember", ["remynd"]),
    ("rickets",         "noun",      "unknown",     None,      ["the world", "health and disease"], "a disease of children", ["rickettes"]),
    ("sequestrator",    "noun",      "borrowing",   "Latin",   ["society", "law", "administration of justice"], "one who sequesters property", []),
    ("servient",        "noun",      "borrowing",   "Latin",   ["society", "authority"], "a subordinate", ["servients"]),
    ("statement",       "noun",      "derivation",  None,      ["the mind", "language", "statement"], "something stated", []),
    ("Swede",           "noun",      "borrowing",   "German",  ["society", "society and the community"], "a native of Sweden", ["swedes"]),
    ("tea",             "noun",      "borrowing",   "French",  ["the world", "food and drink"], "the drink", ["tee", "thee"]),
    ("variously",       "adverb",    "derivation",  None,      ["the world", "relative properties"], "in various ways", ["variouslie"]),
    ("vibrate",         "verb",      "borrowing",   "Latin",   ["the world", "movement"], "to move to and fro", []),
    ("visit",           "noun",      "derivation",  None,      ["society", "society and the community"], "an act of visiting", ["visits"]),
    ("voluminous",      "adjective", "borrowing",   "Latin",   ["the world", "relative properties"], "of great bulk", []),
]

C18 = [
    ("anecdote-monger",   "noun",      "compounding", None,     ["society", "communication"], "a retailer of anecdotes", []),
    ("blacky",            "noun",      "derivation",  None,     ["the world", "people"], "a black person", []),
    ("cream-can",         "noun",      "compounding", None,     ["the world", "matter"], "a smoking apparatus", ["cream-cann"]),
    ("dénouement",        "noun",      "borrowing",   "French", ["the mind", "language"], "the unravelling of a plot", []),
    ("floreat",           "noun",      "conversion",  None,     ["society", "education"], "an expression of good wishes", []),
    ("foundling-house",   "noun",      "compounding", None,     ["the world", "dwelling"], "a foundling hospital", ["fondling-house", "foundling", "fondling"]),
    ("funny",             "adjective", "derivation",  None,     ["the world", "relative properties"], "strange, odd", []),
    ("hookah",            "noun",      "borrowing",   "Arabic", ["the world", "food and drink"], "a tobacco pipe", ["hoocah"]),
    ("inspectress",       "noun",      "derivation",  None,     ["society", "authority"], "a female inspector", []),
    ("interference",      "noun",      "derivation",  None,     ["the mind", "will"], "meddling", []),
    ("jumpable",          "adjective", "derivation",  None,     ["society", "leisure"], "that can be jumped", []),
    ("lovee",             "noun",      "derivation",  None,     ["the mind", "emotion"], "a beloved person", []),
    ("lumber-room",       "noun",      "compounding", None,     ["the world", "dwelling"], "a room for storing lumber", []),
    ("merry-Andrew-like", "adjective", "derivation",  None,     ["society", "leisure"], "like a buffoon", ["andrew-like"]),
    ("miliary fever",     "noun",      "derivation",  None,     ["the world", "health and disease"], "a fever with a rash", ["miliary"]),
    ("moonery",           "noun",      "derivation",  None,     ["the mind", "mental capacity"], "moonstruck behaviour", []),
    ("mooning",           "noun",      "derivation",  None,     ["the mind", "emotion"], "listless wandering", []),
    ("namby-pamby",       "adverb",    "conversion",  None,     ["the world", "relative properties"], "in an insipid manner", []),
    ("puddingless",       "adjective", "derivation",  None,     ["the world", "food and drink"], "without pudding", ["pudding-less"]),
    ("sentimental",       "adjective", "derivation",  None,     ["the mind", "emotion"], "characterized by sentiment", []),
    ("tittup",            "verb",      "unknown",     None,     ["society", "leisure"], "to prance", []),
]
# fmt: on

FIXED_ATTESTATION = {
    ("packet-boat", "noun"): 1642,
    ("statement", "noun"): 1750,
    ("tea", "noun"): 1655,
    ("idolum", "noun"): 1647,
}

ANTEDATED_17 = {
    "covenanting", "crawling", "efficaciously", "helpfulness", "hint",
    "incognito", "joke", "landgravine", "malignancy", "oversweetness",
    "packet-boat", "plenipotentiary", "statement", "tea", "vibrate",
}

ANTEDATED_18 = {
    "hookah", "inspectress", "interference", "merry-Andrew-like", "mooning",
    "puddingless",
}

# Entries that carry an older, non-neologism sense in addition to the
# sense the reviewers verify; exercises sense-over-entry dating.
OLDER_SENSES = {
    ("hint", "verb"): ("to take hold of", 1604, ["the world", "action or operation"]),
    ("visit", "noun"): ("a pastoral visitation", 1606, ["society", "faith"]),
    ("statement", "noun"): ("the act of stating", 1656, ["the mind", "language"]),
}

NO_ENTRY_17 = ["cavaliership", "plunderous", "scotified", "unmalignant"]
NO_ENTRY_18 = [
    "fellow-labourer", "pelhamized", "soul-cheering", "budgerow",
    "chattah", "dubash", "cumerbund", "sircar", "palankeen-bearer",
    "hookabadar", "punkah-puller", "chowkidar", "banian-gown",
]
