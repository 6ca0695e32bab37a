#!/usr/bin/env python3
"""Regenerate the frozen CoNLL-U fixtures and the mini dataset.

Fixture trees are hand-authored here as token tuples, round-tripped
through the serializer, and sanity-checked (each pattern fixture must
trigger its designated pattern) before being written to
src/conjr/data/fixtures/ and src/conjr/data/mini.jsonl.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from conjr.dataset import ConjunctionMark, Instance, Rewrite, save  # noqa: E402
from conjr.depgraph import DepGraph, Token, serialize_conllu  # noqa: E402
from conjr.patterns import compile_catalog, detect  # noqa: E402

OUT = ROOT / "src" / "conjr" / "data" / "fixtures"

# (form, lemma, upos, xpos, head, deprel)
SENTENCES = {
    "F1": [
        ("Josh", "josh", "PROPN", "NNP", 2, "nsubj"),
        ("likes", "like", "VERB", "VBZ", 0, "root"),
        ("wine", "wine", "NOUN", "NN", 2, "dobj"),
    ],
    "F2": [
        ("Jane", "jane", "PROPN", "NNP", 2, "nsubj"),
        ("likes", "like", "VERB", "VBZ", 0, "root"),
        ("water", "water", "NOUN", "NN", 2, "dobj"),
    ],
    "F3": [
        ("Josh", "josh", "PROPN", "NNP", 2, "nsubj"),
        ("likes", "like", "VERB", "VBZ", 0, "root"),
        ("wine", "wine", "NOUN", "NN", 2, "dobj"),
        ("and", "and", "CCONJ", "CC", 3, "cc"),
        ("Jane", "jane", "PROPN", "NNP", 6, "compound"),
        ("water", "water", "NOUN", "NN", 3, "conj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "F4": [
        ("32%", "32%", "NOUN", "NN", 2, "nsubj"),
        ("had", "have", "VERB", "VBD", 0, "root"),
        ("brown", "brown", "ADJ", "JJ", 2, "dobj"),
        ("and", "and", "CCONJ", "CC", 2, "cc"),
        ("21%", "21%", "NOUN", "NN", 6, "nsubj"),
        ("black", "black", "ADJ", "JJ", 2, "conj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "governor": [
        ("The", "the", "DET", "DT", 2, "det"),
        ("governor", "governor", "NOUN", "NN", 3, "nsubj"),
        ("urged", "urge", "VERB", "VBD", 0, "root"),
        ("the", "the", "DET", "DT", 5, "det"),
        ("public", "public", "NOUN", "NN", 3, "dobj"),
        ("not", "not", "PART", "RB", 8, "neg"),
        ("to", "to", "PART", "TO", 8, "aux"),
        ("panic", "panic", "VERB", "VB", 3, "xcomp"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P01": [
        ("Koreans", "korean", "PROPN", "NNPS", 2, "nsubj"),
        ("made", "make", "VERB", "VBD", 0, "root"),
        ("up", "up", "ADP", "RP", 2, "prt"),
        ("1.2%", "1.2%", "NUM", "CD", 2, "dobj"),
        ("of", "of", "ADP", "IN", 4, "prep"),
        ("the", "the", "DET", "DT", 9, "det"),
        ("city", "city", "NOUN", "NN", 9, "poss"),
        ("'s", "'s", "PART", "POS", 7, "case"),
        ("population", "population", "NOUN", "NN", 5, "pobj"),
        (",", ",", "PUNCT", ",", 2, "punct"),
        ("and", "and", "CCONJ", "CC", 2, "cc"),
        ("Japanese", "japanese", "PROPN", "NNP", 2, "conj"),
        ("0.3%", "0.3%", "NUM", "CD", 12, "appos"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "P02": [
        ("Ten", "ten", "NUM", "CD", 2, "nummod"),
        ("chapters", "chapter", "NOUN", "NNS", 4, "nsubjpass"),
        ("are", "be", "AUX", "VBP", 4, "auxpass"),
        ("devoted", "devote", "VERB", "VBN", 0, "root"),
        ("to", "to", "ADP", "IN", 4, "prep"),
        ("body", "body", "NOUN", "NN", 7, "compound"),
        ("issues", "issue", "NOUN", "NNS", 5, "pobj"),
        ("and", "and", "CCONJ", "CC", 7, "cc"),
        ("how", "how", "ADV", "WRB", 11, "advmod"),
        ("to", "to", "PART", "TO", 11, "aux"),
        ("cover", "cover", "VERB", "VB", 7, "conj"),
        ("them", "they", "PRON", "PRP", 11, "dobj"),
        (".", ".", "PUNCT", ".", 4, "punct"),
    ],
    "P03": [
        ("Desormeaux", "desormeaux", "PROPN", "NNP", 3, "nsubj"),
        ("has", "have", "AUX", "VBZ", 3, "aux"),
        ("won", "win", "VERB", "VBN", 0, "root"),
        ("the", "the", "DET", "DT", 5, "det"),
        ("Preakness", "preakness", "PROPN", "NNP", 3, "dobj"),
        ("twice", "twice", "ADV", "RB", 3, "advmod"),
        (":", ":", "PUNCT", ":", 3, "punct"),
        ("once", "once", "ADV", "RB", 3, "advmod"),
        ("aboard", "aboard", "ADP", "IN", 8, "prep"),
        ("Real", "real", "PROPN", "NNP", 11, "compound"),
        ("Quiet", "quiet", "PROPN", "NNP", 9, "pobj"),
        ("in", "in", "ADP", "IN", 8, "prep"),
        ("1998", "1998", "NUM", "CD", 12, "pobj"),
        ("and", "and", "CCONJ", "CC", 8, "cc"),
        ("again", "again", "ADV", "RB", 19, "advmod"),
        ("10", "10", "NUM", "CD", 17, "nummod"),
        ("years", "year", "NOUN", "NNS", 18, "npadvmod"),
        ("later", "later", "ADV", "RB", 19, "advmod"),
        ("on", "on", "ADP", "IN", 8, "conj"),
        ("Big", "big", "PROPN", "NNP", 21, "compound"),
        ("Brown", "brown", "PROPN", "NNP", 19, "pobj"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P04": [
        ("Tell", "tell", "VERB", "VB", 0, "root"),
        ("us", "we", "PRON", "PRP", 1, "dobj"),
        ("in", "in", "ADP", "IN", 1, "prep"),
        ("the", "the", "DET", "DT", 5, "det"),
        ("comments", "comment", "NOUN", "NNS", 3, "pobj"),
        ("below", "below", "ADV", "RB", 5, "advmod"),
        ("or", "or", "CCONJ", "CC", 3, "cc"),
        ("@CNNFilms", "@cnnfilms", "PROPN", "NNP", 3, "conj"),
        ("on", "on", "ADP", "IN", 8, "prep"),
        ("Twitter", "twitter", "PROPN", "NNP", 9, "pobj"),
        (".", ".", "PUNCT", ".", 1, "punct"),
    ],
    "P05": [
        ("Southwest", "southwest", "PROPN", "NNP", 2, "nsubj"),
        ("said", "say", "VERB", "VBD", 0, "root"),
        ("all", "all", "DET", "DT", 4, "det"),
        ("customers", "customer", "NOUN", "NNS", 5, "nsubj"),
        ("were", "be", "AUX", "VBD", 2, "ccomp"),
        ("safe", "safe", "ADJ", "JJ", 5, "acomp"),
        ("and", "and", "CCONJ", "CC", 6, "cc"),
        ("at", "at", "ADP", "IN", 6, "conj"),
        ("the", "the", "DET", "DT", 10, "det"),
        ("terminal", "terminal", "NOUN", "NN", 8, "pobj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "P06": [
        ("To", "to", "ADP", "IN", 12, "prep"),
        ("idealists", "idealist", "NOUN", "NNS", 1, "pobj"),
        (",", ",", "PUNCT", ",", 12, "punct"),
        ("spirit", "spirit", "NOUN", "NN", 12, "nsubj"),
        ("or", "or", "CCONJ", "CC", 4, "cc"),
        ("mind", "mind", "NOUN", "NN", 4, "conj"),
        ("or", "or", "CCONJ", "CC", 4, "cc"),
        ("the", "the", "DET", "DT", 9, "det"),
        ("objects", "object", "NOUN", "NNS", 4, "conj"),
        ("of", "of", "ADP", "IN", 9, "prep"),
        ("mind", "mind", "NOUN", "NN", 10, "pobj"),
        ("are", "be", "AUX", "VBP", 0, "root"),
        ("primary", "primary", "ADJ", "JJ", 12, "acomp"),
        (",", ",", "PUNCT", ",", 12, "punct"),
        ("and", "and", "CCONJ", "CC", 13, "cc"),
        ("matter", "matter", "NOUN", "NN", 17, "nsubj"),
        ("secondary", "secondary", "ADJ", "JJ", 13, "conj"),
        (".", ".", "PUNCT", ".", 12, "punct"),
    ],
    "P07": [
        ("John", "john", "PROPN", "NNP", 3, "nsubjpass"),
        ("was", "be", "AUX", "VBD", 3, "auxpass"),
        ("born", "bear", "VERB", "VBN", 0, "root"),
        ("to", "to", "ADP", "IN", 3, "prep"),
        ("Henry", "henry", "PROPN", "NNP", 4, "pobj"),
        ("II", "ii", "PROPN", "NNP", 5, "appos"),
        ("of", "of", "ADP", "IN", 5, "prep"),
        ("England", "england", "PROPN", "NNP", 7, "pobj"),
        ("and", "and", "CCONJ", "CC", 5, "cc"),
        ("Eleanor", "eleanor", "PROPN", "NNP", 5, "conj"),
        ("of", "of", "ADP", "IN", 10, "prep"),
        ("Aquitaine", "aquitaine", "PROPN", "NNP", 11, "pobj"),
        ("on", "on", "ADP", "IN", 3, "prep"),
        ("24", "24", "NUM", "CD", 15, "nummod"),
        ("December", "december", "PROPN", "NNP", 13, "pobj"),
        ("1166", "1166", "NUM", "CD", 15, "nummod"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P08": [
        ("From", "from", "ADP", "IN", 0, "root"),
        ("the", "the", "DET", "DT", 3, "det"),
        ("1880s", "1880s", "NOUN", "NNS", 1, "pobj"),
        ("onward", "onward", "ADV", "RB", 1, "advmod"),
        ("neighbourhoods", "neighbourhood", "NOUN", "NNS", 23, "nsubjpass"),
        ("such", "such", "ADJ", "JJ", 5, "amod"),
        ("as", "as", "ADP", "IN", 5, "prep"),
        ("Oudwijk", "oudwijk", "PROPN", "NNP", 7, "pobj"),
        (",", ",", "PUNCT", ",", 8, "punct"),
        ("Wittevrouwen", "wittevrouwen", "PROPN", "NNP", 8, "conj"),
        (",", ",", "PUNCT", ",", 8, "punct"),
        ("Vogelenbuurt", "vogelenbuurt", "PROPN", "NNP", 8, "conj"),
        ("to", "to", "ADP", "IN", 12, "prep"),
        ("the", "the", "DET", "DT", 15, "det"),
        ("East", "east", "PROPN", "NNP", 13, "pobj"),
        (",", ",", "PUNCT", ",", 8, "punct"),
        ("and", "and", "CCONJ", "CC", 8, "cc"),
        ("Lombok", "lombok", "PROPN", "NNP", 8, "conj"),
        ("to", "to", "ADP", "IN", 18, "prep"),
        ("the", "the", "DET", "DT", 21, "det"),
        ("West", "west", "PROPN", "NNP", 19, "pobj"),
        ("were", "be", "AUX", "VBD", 23, "auxpass"),
        ("developed", "develop", "VERB", "VBN", 1, "prep"),
        (".", ".", "PUNCT", ".", 1, "punct"),
    ],
    "P09": [
        ("19", "19", "NUM", "CD", 2, "nummod"),
        ("soldiers", "soldier", "NOUN", "NNS", 5, "nsubj"),
        (",", ",", "PUNCT", ",", 2, "punct"),
        ("policemen", "policeman", "NOUN", "NNS", 2, "appos"),
        ("reported", "report", "VERB", "VBD", 0, "root"),
        ("wounded", "wound", "VERB", "VBN", 5, "xcomp"),
        (",", ",", "PUNCT", ",", 5, "punct"),
        ("and", "and", "CCONJ", "CC", 5, "cc"),
        ("some", "some", "DET", "DT", 10, "det"),
        ("attackers", "attacker", "NOUN", "NNS", 11, "nsubj"),
        ("killed", "kill", "VERB", "VBN", 5, "conj"),
        (",", ",", "PUNCT", ",", 11, "punct"),
        ("wounded", "wound", "VERB", "VBN", 11, "conj"),
        ("or", "or", "CCONJ", "CC", 11, "cc"),
        ("captured", "capture", "VERB", "VBN", 11, "conj"),
        (".", ".", "PUNCT", ".", 5, "punct"),
    ],
    "P10": [
        ("You", "you", "PRON", "PRP", 2, "nsubj"),
        ("send", "send", "VERB", "VBP", 0, "root"),
        ("out", "out", "ADP", "RP", 2, "prt"),
        ("these", "these", "DET", "DT", 6, "det"),
        ("sound", "sound", "NOUN", "NN", 6, "compound"),
        ("waves", "wave", "NOUN", "NNS", 2, "dobj"),
        (",", ",", "PUNCT", ",", 2, "punct"),
        ("and", "and", "CCONJ", "CC", 2, "cc"),
        ("when", "when", "ADV", "WRB", 11, "advmod"),
        ("they", "they", "PRON", "PRP", 11, "nsubj"),
        ("bounce", "bounce", "VERB", "VBP", 21, "advcl"),
        ("off", "off", "ADP", "RP", 11, "prt"),
        ("of", "of", "ADP", "IN", 11, "prep"),
        ("objects", "object", "NOUN", "NNS", 13, "pobj"),
        (",", ",", "PUNCT", ",", 21, "punct"),
        ("the", "the", "DET", "DT", 17, "det"),
        ("reflection", "reflection", "NOUN", "NN", 21, "nsubj"),
        ("of", "of", "ADP", "IN", 17, "prep"),
        ("the", "the", "DET", "DT", 20, "det"),
        ("waves", "wave", "NOUN", "NNS", 18, "pobj"),
        ("tells", "tell", "VERB", "VBZ", 2, "conj"),
        ("you", "you", "PRON", "PRP", 21, "dobj"),
        ("-", "-", "PUNCT", ":", 21, "punct"),
        ("or", "or", "CCONJ", "CC", 22, "cc"),
        ("in", "in", "ADP", "IN", 30, "prep"),
        ("this", "this", "DET", "DT", 27, "det"),
        ("case", "case", "NOUN", "NN", 25, "pobj"),
        (",", ",", "PUNCT", ",", 30, "punct"),
        ("the", "the", "DET", "DT", 30, "det"),
        ("animal", "animal", "NOUN", "NN", 22, "conj"),
        ("-", "-", "PUNCT", ":", 21, "punct"),
        ("where", "where", "ADV", "WRB", 35, "advmod"),
        ("the", "the", "DET", "DT", 34, "det"),
        ("objects", "object", "NOUN", "NNS", 35, "nsubj"),
        ("are", "be", "AUX", "VBP", 21, "ccomp"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "P11": [
        ("Some", "some", "DET", "DT", 2, "det"),
        ("runners", "runner", "NOUN", "NNS", 3, "nsubj"),
        ("started", "start", "VERB", "VBD", 0, "root"),
        ("raising", "raise", "VERB", "VBG", 3, "xcomp"),
        ("money", "money", "NOUN", "NN", 4, "dobj"),
        ("for", "for", "ADP", "IN", 5, "prep"),
        ("charity", "charity", "NOUN", "NN", 6, "pobj"),
        ("or", "or", "CCONJ", "CC", 7, "cc"),
        ("to", "to", "PART", "TO", 10, "aux"),
        ("help", "help", "VERB", "VB", 7, "conj"),
        ("with", "with", "ADP", "IN", 10, "prep"),
        ("relief", "relief", "NOUN", "NN", 13, "compound"),
        ("efforts", "effort", "NOUN", "NNS", 11, "pobj"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P12": [
        ("Every", "every", "DET", "DT", 2, "det"),
        ("day", "day", "NOUN", "NN", 7, "npadvmod"),
        (",", ",", "PUNCT", ",", 7, "punct"),
        ("someone", "someone", "PRON", "NN", 7, "nsubjpass"),
        ("new", "new", "ADJ", "JJ", 4, "amod"),
        ("is", "be", "AUX", "VBZ", 7, "auxpass"),
        ("introduced", "introduce", "VERB", "VBN", 0, "root"),
        ("to", "to", "ADP", "IN", 7, "prep"),
        ("the", "the", "DET", "DT", 10, "det"),
        ("hardships", "hardship", "NOUN", "NNS", 8, "pobj"),
        ("of", "of", "ADP", "IN", 10, "prep"),
        ("wartime", "wartime", "ADJ", "JJ", 14, "amod"),
        ("military", "military", "ADJ", "JJ", 14, "amod"),
        ("service", "service", "NOUN", "NN", 11, "pobj"),
        ("or", "or", "CCONJ", "CC", 10, "cc"),
        ("the", "the", "DET", "DT", 17, "det"),
        ("horrors", "horror", "NOUN", "NNS", 10, "conj"),
        ("of", "of", "ADP", "IN", 17, "prep"),
        ("combat", "combat", "NOUN", "NN", 18, "pobj"),
        (".", ".", "PUNCT", ".", 7, "punct"),
    ],
    "P13": [
        ("Progress", "progress", "NOUN", "NN", 0, "root"),
        ("in", "in", "ADP", "IN", 1, "prep"),
        ("the", "the", "DET", "DT", 5, "det"),
        ("Business", "business", "PROPN", "NNP", 5, "compound"),
        ("District", "district", "PROPN", "NNP", 2, "pobj"),
        ("but", "but", "CCONJ", "CC", 1, "cc"),
        ("lingering", "lingering", "ADJ", "JJ", 8, "amod"),
        ("blight", "blight", "NOUN", "NN", 1, "conj"),
        ("in", "in", "ADP", "IN", 8, "prep"),
        ("poorer", "poor", "ADJ", "JJR", 11, "amod"),
        ("neighborhoods", "neighborhood", "NOUN", "NNS", 9, "pobj"),
        (",", ",", "PUNCT", ",", 1, "punct"),
        ("he", "he", "PRON", "PRP", 14, "nsubj"),
        ("says", "say", "VERB", "VBZ", 1, "ccomp"),
        (".", ".", "PUNCT", ".", 1, "punct"),
    ],
    "P14": [
        ("In", "in", "ADP", "IN", 6, "prep"),
        ("1995", "1995", "NUM", "CD", 1, "pobj"),
        (",", ",", "PUNCT", ",", 6, "punct"),
        ("material", "material", "NOUN", "NN", 5, "compound"),
        ("costs", "cost", "NOUN", "NNS", 6, "nsubj"),
        ("were", "be", "AUX", "VBD", 0, "root"),
        ("30", "30", "NUM", "CD", 8, "nummod"),
        ("cents", "cent", "NOUN", "NNS", 6, "attr"),
        ("for", "for", "ADP", "IN", 8, "prep"),
        ("the", "the", "DET", "DT", 12, "det"),
        ("jewel", "jewel", "NOUN", "NN", 12, "compound"),
        ("case", "case", "NOUN", "NN", 9, "pobj"),
        ("and", "and", "CCONJ", "CC", 8, "cc"),
        ("10", "10", "NUM", "CD", 16, "nummod"),
        ("to", "to", "PART", "TO", 16, "quantmod"),
        ("15", "15", "NUM", "CD", 17, "nummod"),
        ("cents", "cent", "NOUN", "NNS", 8, "conj"),
        ("for", "for", "ADP", "IN", 17, "prep"),
        ("the", "the", "DET", "DT", 20, "det"),
        ("CD", "cd", "PROPN", "NNP", 18, "pobj"),
        (".", ".", "PUNCT", ".", 6, "punct"),
    ],
    "P15": [
        ("Neesham", "neesham", "PROPN", "NNP", 3, "nsubj"),
        ("would", "would", "AUX", "MD", 3, "aux"),
        ("make", "make", "VERB", "VB", 0, "root"),
        ("85", "85", "NUM", "CD", 3, "dobj"),
        ("from", "from", "ADP", "IN", 4, "prep"),
        ("80", "80", "NUM", "CD", 5, "pobj"),
        ("and", "and", "CCONJ", "CC", 3, "cc"),
        ("Kane", "kane", "PROPN", "NNP", 9, "compound"),
        ("Williamson", "williamson", "PROPN", "NNP", 13, "nsubj"),
        ("a", "a", "DET", "DT", 13, "det"),
        ("more", "more", "ADV", "RBR", 12, "advmod"),
        ("considered", "considered", "ADJ", "JJ", 13, "amod"),
        ("54", "54", "NUM", "CD", 3, "conj"),
        ("from", "from", "ADP", "IN", 13, "prep"),
        ("98", "98", "NUM", "CD", 14, "pobj"),
        ("as", "as", "ADP", "IN", 19, "mark"),
        ("Sri", "sri", "PROPN", "NNP", 18, "compound"),
        ("Lanka", "lanka", "PROPN", "NNP", 19, "nsubj"),
        ("toiled", "toil", "VERB", "VBD", 3, "advcl"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P16": [
        ("It", "it", "PRON", "PRP", 4, "nsubjpass"),
        ("is", "be", "AUX", "VBZ", 4, "auxpass"),
        ("also", "also", "ADV", "RB", 4, "advmod"),
        ("used", "use", "VERB", "VBN", 0, "root"),
        ("in", "in", "ADP", "IN", 4, "prep"),
        ("woodcut", "woodcut", "NOUN", "NN", 7, "compound"),
        ("printmaking", "printmaking", "NOUN", "NN", 5, "pobj"),
        (",", ",", "PUNCT", ",", 5, "punct"),
        ("and", "and", "CCONJ", "CC", 5, "cc"),
        ("for", "for", "ADP", "IN", 5, "conj"),
        ("engraving", "engraving", "NOUN", "NN", 10, "pobj"),
        (".", ".", "PUNCT", ".", 4, "punct"),
    ],
    "P17": [
        ("This", "this", "DET", "DT", 2, "nsubj"),
        ("is", "be", "AUX", "VBZ", 0, "root"),
        ("The", "the", "DET", "DT", 4, "det"),
        ("Joker", "joker", "PROPN", "NNP", 6, "poss"),
        ("'s", "'s", "PART", "POS", 4, "case"),
        ("war", "war", "NOUN", "NN", 2, "attr"),
        ("on", "on", "ADP", "IN", 6, "prep"),
        ("Batman", "batman", "PROPN", "NNP", 7, "pobj"),
        ("and", "and", "CCONJ", "CC", 7, "cc"),
        ("even", "even", "ADV", "RB", 11, "advmod"),
        ("more", "more", "ADV", "RBR", 12, "advmod"),
        ("so", "so", "ADV", "RB", 14, "advmod"),
        (",", ",", "PUNCT", ",", 14, "punct"),
        ("on", "on", "ADP", "IN", 7, "conj"),
        ("his", "his", "PRON", "PRP$", 16, "poss"),
        ("family", "family", "NOUN", "NN", 14, "pobj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "P18": [
        ("They", "they", "PRON", "PRP", 3, "nsubj"),
        ("'ve", "have", "AUX", "VBP", 3, "aux"),
        ("been", "be", "AUX", "VBN", 0, "root"),
        ("major", "major", "ADJ", "JJ", 5, "amod"),
        ("players", "player", "NOUN", "NNS", 3, "attr"),
        ("in", "in", "ADP", "IN", 5, "prep"),
        ("the", "the", "DET", "DT", 8, "det"),
        ("uprisings", "uprising", "NOUN", "NNS", 6, "pobj"),
        ("in", "in", "ADP", "IN", 8, "prep"),
        ("Yemen", "yemen", "PROPN", "NNP", 9, "pobj"),
        ("and", "and", "CCONJ", "CC", 9, "cc"),
        ("in", "in", "ADP", "IN", 9, "conj"),
        ("Syria", "syria", "PROPN", "NNP", 12, "pobj"),
        (".", ".", "PUNCT", ".", 3, "punct"),
    ],
    "P19": [
        ("Government", "government", "NOUN", "NN", 2, "compound"),
        ("control", "control", "NOUN", "NN", 11, "nsubjpass"),
        ("of", "of", "ADP", "IN", 2, "prep"),
        ("the", "the", "DET", "DT", 5, "det"),
        ("economy", "economy", "NOUN", "NN", 3, "pobj"),
        ("and", "and", "CCONJ", "CC", 3, "cc"),
        ("of", "of", "ADP", "IN", 3, "conj"),
        ("expression", "expression", "NOUN", "NN", 7, "pobj"),
        ("is", "be", "AUX", "VBZ", 11, "auxpass"),
        ("much", "much", "ADV", "RB", 11, "advmod"),
        ("reduced", "reduce", "VERB", "VBN", 14, "ccomp"),
        (",", ",", "PUNCT", ",", 14, "punct"),
        ("he", "he", "PRON", "PRP", 14, "nsubj"),
        ("says", "say", "VERB", "VBZ", 0, "root"),
        (".", ".", "PUNCT", ".", 14, "punct"),
    ],
    "P20": [
        ("They", "they", "PRON", "PRP", 2, "nsubj"),
        ("concentrated", "concentrate", "VERB", "VBD", 0, "root"),
        ("in", "in", "ADP", "IN", 2, "prep"),
        ("trade", "trade", "NOUN", "NN", 3, "pobj"),
        (",", ",", "PUNCT", ",", 4, "punct"),
        ("services", "service", "NOUN", "NNS", 4, "conj"),
        (",", ",", "PUNCT", ",", 4, "punct"),
        ("and", "and", "CCONJ", "CC", 4, "cc"),
        ("especially", "especially", "ADV", "RB", 10, "advmod"),
        ("in", "in", "ADP", "IN", 4, "conj"),
        ("money", "money", "NOUN", "NN", 12, "compound"),
        ("lending", "lending", "NOUN", "NN", 10, "pobj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ],
    "P21": [
        ("The", "the", "DET", "DT", 3, "det"),
        ("meteor", "meteor", "NOUN", "NN", 3, "compound"),
        ("show", "show", "NOUN", "NN", 4, "nsubj"),
        ("is", "be", "AUX", "VBZ", 0, "root"),
        ("entertainment", "entertainment", "NOUN", "NN", 4, "attr"),
        ("for", "for", "ADP", "IN", 5, "prep"),
        ("most", "most", "ADJ", "JJS", 6, "pobj"),
        (",", ",", "PUNCT", ",", 5, "punct"),
        ("but", "but", "CCONJ", "CC", 5, "cc"),
        ("a", "a", "DET", "DT", 12, "det"),
        ("research", "research", "NOUN", "NN", 12, "compound"),
        ("chance", "chance", "NOUN", "NN", 5, "conj"),
        ("for", "for", "ADP", "IN", 12, "prep"),
        ("NASA", "nasa", "PROPN", "NNP", 13, "pobj"),
        (".", ".", "PUNCT", ".", 4, "punct"),
    ],
}


def detok(forms):
    out = ""
    for f in forms:
        if f in {",", ".", ":", ";", "?", "!"} or f in {"'s", "'ve", "n't", "'d", "'ll"}:
            out += f
        elif out:
            out += " " + f
        else:
            out = f
    return out


def build(name, rows):
    tokens = [
        Token(index=i + 1, form=f, lemma=l, upos=u, xpos=x, head=h, deprel=d)
        for i, (f, l, u, x, h, d) in enumerate(rows)
    ]
    return DepGraph(tuple(tokens), text=detok([r[0] for r in rows]), id=name)


def check_patterns(graphs):
    patterns = compile_catalog()
    for name, g in graphs.items():
        if not name.startswith("P"):
            continue
        hits = {m.pattern_id for m in detect(g, patterns)}
        assert name in hits, f"{name}: designated pattern not triggered (got {sorted(hits)})"
    # the F4 examples from the motivating diagram
    hits = {m.pattern_id for m in detect(graphs["F4"], patterns)}
    assert {"P01", "P06"} <= hits, f"F4 expected P01+P06, got {sorted(hits)}"


# --- mini dataset -----------------------------------------------------------

def svo(name, subj, verb, obj):
    """Parse for '<Subj> <verb>s <obj> .' with a VBZ root."""
    rows = [
        (subj, subj.lower(), "PROPN", "NNP", 2, "nsubj"),
        (verb, verb.rstrip("s"), "VERB", "VBZ", 0, "root"),
        (obj, obj.lower(), "NOUN", "NN", 2, "dobj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ]
    return build(name, rows)


def gapping_pair(name, verb, s1, o1, s2, o2, conj):
    """'S1 verb O1 <conj> S2 O2 .' parsed with the noun-compound
    misanalysis of the second conjunct, like the motivating example."""
    rows = [
        (s1, s1.lower(), "PROPN", "NNP", 2, "nsubj"),
        (verb, verb.rstrip("s"), "VERB", "VBZ", 0, "root"),
        (o1, o1.lower(), "NOUN", "NN", 2, "dobj"),
        (conj, conj, "CCONJ", "CC", 3, "cc"),
        (s2, s2.lower(), "PROPN", "NNP", 6, "compound"),
        (o2, o2.lower(), "NOUN", "NN", 3, "conj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ]
    return build(name, rows)


def gapping_triple(name, verb, parts, conj):
    """'S1 verb O1 , S2 O2 <conj> S3 O3 .'"""
    (s1, o1), (s2, o2), (s3, o3) = parts
    rows = [
        (s1, s1.lower(), "PROPN", "NNP", 2, "nsubj"),
        (verb, verb.rstrip("s"), "VERB", "VBZ", 0, "root"),
        (o1, o1.lower(), "NOUN", "NN", 2, "dobj"),
        (",", ",", "PUNCT", ",", 3, "punct"),
        (s2, s2.lower(), "PROPN", "NNP", 6, "compound"),
        (o2, o2.lower(), "NOUN", "NN", 3, "conj"),
        (conj, conj, "CCONJ", "CC", 3, "cc"),
        (s3, s3.lower(), "PROPN", "NNP", 9, "compound"),
        (o3, o3.lower(), "NOUN", "NN", 3, "conj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ]
    return build(name, rows)


def gapping_quad(name, verb, parts, conj):
    (s1, o1), (s2, o2), (s3, o3), (s4, o4) = parts
    rows = [
        (s1, s1.lower(), "PROPN", "NNP", 2, "nsubj"),
        (verb, verb.rstrip("s"), "VERB", "VBZ", 0, "root"),
        (o1, o1.lower(), "NOUN", "NN", 2, "dobj"),
        (",", ",", "PUNCT", ",", 3, "punct"),
        (s2, s2.lower(), "PROPN", "NNP", 6, "compound"),
        (o2, o2.lower(), "NOUN", "NN", 3, "conj"),
        (",", ",", "PUNCT", ",", 3, "punct"),
        (s3, s3.lower(), "PROPN", "NNP", 9, "compound"),
        (o3, o3.lower(), "NOUN", "NN", 3, "conj"),
        (conj, conj, "CCONJ", "CC", 3, "cc"),
        (s4, s4.lower(), "PROPN", "NNP", 12, "compound"),
        (o4, o4.lower(), "NOUN", "NN", 3, "conj"),
        (".", ".", "PUNCT", ".", 2, "punct"),
    ]
    return build(name, rows)


def conj_mark(graph, conj):
    for t in graph.tokens:
        if t.form == conj:
            start = graph.text.find(" " + conj + " ")
            start = start + 1 if start >= 0 else graph.text.find(conj)
            return ConjunctionMark(conj, t.index, (start, start + len(conj)))
    raise AssertionError(f"no {conj!r} in {graph.text}")


def instance_from(graph, conj, rewrite_graphs, source="fixture", reason=None):
    rewrites = [
        Rewrite(text=g.text, conllu=serialize_conllu([g])) for g in rewrite_graphs
    ]
    return Instance(
        id=graph.id,
        source=source,
        text=graph.text,
        conjunction=conj_mark(graph, conj),
        conllu=serialize_conllu([graph]),
        rewritable=bool(rewrite_graphs),
        rewrites=rewrites,
        not_rewritable_reason=reason,
    )


def mini_dataset():
    pairs = [
        ("likes", "Josh", "wine", "Jane", "water", "and"),
        ("wants", "Tom", "tea", "Ann", "coffee", "and"),
        ("prefers", "Alice", "cats", "Bob", "dogs", "or"),
        ("needs", "Mark", "rest", "Lucy", "coffee", "but"),
        ("likes", "Dana", "jazz", "Omar", "rock", "and"),
        ("wants", "Noa", "bread", "Eli", "cheese", "or"),
        ("prefers", "Ruth", "trains", "Adam", "buses", "but"),
        ("needs", "Ben", "paper", "Maya", "ink", "and"),
        ("likes", "Gil", "soup", "Tamar", "salad", "or"),
        ("wants", "Ron", "books", "Shir", "films", "and"),
        ("prefers", "Ken", "summer", "Mia", "winter", "but"),
        ("needs", "Amir", "quiet", "Yael", "music", "and"),
    ]
    instances = []
    for i, (verb, s1, o1, s2, o2, conj) in enumerate(pairs, start=1):
        gid = f"mini-{i:03d}"
        g = gapping_pair(gid, verb, s1, o1, s2, o2, conj)
        r1 = svo(f"{gid}-r1", s1, verb, o1)
        r2 = svo(f"{gid}-r2", s2, verb, o2)
        instances.append(instance_from(g, conj, [r1, r2]))

    triples = [
        ("likes", [("Tom", "tea"), ("Ann", "coffee"), ("Sam", "milk")], "and"),
        ("wants", [("Ira", "maps"), ("Lea", "pens"), ("Gur", "glue")], "or"),
    ]
    for i, (verb, parts, conj) in enumerate(triples, start=13):
        gid = f"mini-{i:03d}"
        g = gapping_triple(gid, verb, parts, conj)
        rewrites = [
            svo(f"{gid}-r{j}", s, verb, o) for j, (s, o) in enumerate(parts, start=1)
        ]
        instances.append(instance_from(g, conj, rewrites))

    gid = "mini-015"
    quad = [("Ava", "gold"), ("Liam", "iron"), ("Noah", "salt"), ("Emma", "coal")]
    g = gapping_quad(gid, "wants", quad, "and")
    rewrites = [svo(f"{gid}-r{j}", s, "wants", o) for j, (s, o) in enumerate(quad, start=1)]
    instances.append(instance_from(g, "and", rewrites))

    # left omission with a shared subject
    def received(name, subj_rows, amount, prize, thing):
        rows = list(subj_rows)
        base = len(rows)
        rows += [
            ("received", "receive", "VERB", "VBD", 0, "root"),
            (amount, amount, "NUM", "CD", base + 3, "nummod"),
            ("points", "point", "NOUN", "NNS", base + 1, "dobj"),
            ("for", "for", "ADP", "IN", base + 3, "prep"),
            ("a", "a", "DET", "DT", base + 6, "det"),
            (thing, thing, "NOUN", "NN", base + 4, "pobj"),
            (".", ".", "PUNCT", ".", base + 1, "punct"),
        ]
        return build(name, rows)

    for i, conj in ((16, "and"), (17, "but")):
        gid = f"mini-{i:03d}"
        rows = [
            ("The", "the", "DET", "DT", 2, "det"),
            ("team", "team", "NOUN", "NN", 3, "nsubj"),
            ("received", "receive", "VERB", "VBD", 0, "root"),
            ("three", "three", "NUM", "CD", 5, "nummod"),
            ("points", "point", "NOUN", "NNS", 3, "dobj"),
            ("for", "for", "ADP", "IN", 5, "prep"),
            ("a", "a", "DET", "DT", 8, "det"),
            ("win", "win", "NOUN", "NN", 6, "pobj"),
            (conj, conj, "CCONJ", "CC", 5, "cc"),
            ("one", "one", "NUM", "CD", 11, "nummod"),
            ("point", "point", "NOUN", "NN", 5, "conj"),
            ("for", "for", "ADP", "IN", 11, "prep"),
            ("a", "a", "DET", "DT", 14, "det"),
            ("draw", "draw", "NOUN", "NN", 12, "pobj"),
            (".", ".", "PUNCT", ".", 3, "punct"),
        ]
        g = build(gid, rows)
        subj = [
            ("The", "the", "DET", "DT", 2, "det"),
            ("team", "team", "NOUN", "NN", 3, "nsubj"),
        ]
        r1 = received(f"{gid}-r1", subj, "three", "points", "win")
        r2 = received(f"{gid}-r2", subj, "one", "points", "draw")
        instances.append(instance_from(g, conj, [r1, r2]))

    # non-rewritable: a trailing span binds the clauses together
    non_rewritable = [
        (
            "mini-018",
            "and",
            [
                ("Amla", "amla", "PROPN", "NNP", 2, "nsubj"),
                ("made", "make", "VERB", "VBD", 0, "root"),
                ("133", "133", "NUM", "CD", 2, "dobj"),
                ("and", "and", "CCONJ", "CC", 2, "cc"),
                ("Roussow", "roussow", "PROPN", "NNP", 6, "compound"),
                ("132", "132", "NUM", "CD", 3, "conj"),
                ("with", "with", "ADP", "IN", 2, "prep"),
                ("the", "the", "DET", "DT", 9, "det"),
                ("pair", "pair", "NOUN", "NN", 7, "pobj"),
                ("combining", "combine", "VERB", "VBG", 9, "acl"),
                ("to", "to", "PART", "TO", 12, "aux"),
                ("put", "put", "VERB", "VB", 10, "xcomp"),
                ("on", "on", "ADP", "RP", 12, "prt"),
                ("247", "247", "NUM", "CD", 12, "dobj"),
                (".", ".", "PUNCT", ".", 2, "punct"),
            ],
            "the trailing span describes the pair jointly",
        ),
        (
            "mini-019",
            "but",
            [
                ("The", "the", "DET", "DT", 2, "det"),
                ("goal", "goal", "NOUN", "NN", 3, "nsubj"),
                ("is", "be", "AUX", "VBZ", 0, "root"),
                ("worthy", "worthy", "ADJ", "JJ", 3, "acomp"),
                ("but", "but", "CCONJ", "CC", 4, "cc"),
                ("distant", "distant", "ADJ", "JJ", 4, "conj"),
                ("for", "for", "ADP", "IN", 6, "prep"),
                ("everyone", "everyone", "PRON", "NN", 7, "pobj"),
                ("together", "together", "ADV", "RB", 6, "advmod"),
                (".", ".", "PUNCT", ".", 3, "punct"),
            ],
            "the predicate applies to the plurality as a whole",
        ),
    ]
    for gid, conj, rows, reason in non_rewritable:
        g = build(gid, rows)
        instances.append(instance_from(g, conj, [], reason=reason))

    # one more 'or' pair to balance conjunctions
    gid = "mini-020"
    g = gapping_pair(gid, "likes", "Ziv", "plums", "Tali", "figs", "or")
    r1 = svo(f"{gid}-r1", "Ziv", "likes", "plums")
    r2 = svo(f"{gid}-r2", "Tali", "likes", "figs")
    instances.append(instance_from(g, "or", [r1, r2]))
    return instances


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    graphs = {name: build(name, rows) for name, rows in SENTENCES.items()}
    check_patterns(graphs)
    for name, g in graphs.items():
        (OUT / f"{name}.conllu").write_text(serialize_conllu([g]), encoding="utf-8")
    instances = mini_dataset()
    save(ROOT / "src" / "conjr" / "data" / "mini.jsonl", instances)
    print(f"wrote {len(graphs)} fixtures and {len(instances)} mini-dataset instances")


if __name__ == "__main__":
    main()
