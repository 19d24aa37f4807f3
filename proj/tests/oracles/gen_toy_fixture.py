#!/usr/bin/env python3
"""Generates the bundled toy fixture: corpus, thesaurus, questions, labels.

The corpus plants phrase evidence for five relation families so that the
fixture analogy questions have corpus-forced answers. Planted window counts
are distinct per alternate so filtering is tie-free (and therefore mirror
symmetric). A deterministic filler text pads the corpus to ~7e4 tokens.

Run from the repository root:  python3 tests/oracles/gen_toy_fixture.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from porter_oracle import stem  # noqa: E402

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data", "toy")

# relation -> (pairs, forward templates, reverse template)
RELATIONS = {
    "sound": {
        "pairs": [("cat", "meow"), ("dog", "bark"), ("duck", "quack"), ("cow", "moo"),
                  ("sheep", "baa"), ("lion", "roar"), ("pig", "oink"), ("frog", "croak")],
        "fwd": [["says"], ["will"], ["making", "a"]],
        "rev": ["of", "the"],
        "class30": "product",
        "class5": "participatory",
    },
    "craft": {
        "pairs": [("mason", "stone"), ("carpenter", "wood"), ("blacksmith", "iron"),
                  ("potter", "clay"), ("tailor", "cloth"), ("baker", "bread")],
        "fwd": [["carves", "the"], ["shapes"], ["works", "with", "the"]],
        "rev": ["carved", "by", "the"],
        "class30": "object",
        "class5": "participatory",
    },
    "vessel": {
        "pairs": [("bottle", "water"), ("tank", "fuel"), ("barrel", "wine"), ("jug", "milk")],
        "fwd": [["holds", "the"], ["stores"], ["filled", "with"]],
        "rev": ["kept", "in", "the"],
        "class30": "content",
        "class5": "qualitative",
    },
    "young": {
        "pairs": [("kitten", "cat"), ("puppy", "dog"), ("calf", "cow"), ("lamb", "sheep"),
                  ("cub", "lion")],
        "fwd": [["grows", "into", "a"], ["becomes", "a"], ["resembles"]],
        "rev": ["raising", "its"],
        "class30": "source",
        "class5": "participatory",
    },
    "tool": {
        "pairs": [("hammer", "nail"), ("axe", "log"), ("drill", "hole"), ("saw", "timber")],
        "fwd": [["drives", "the"], ["strikes"], ["cuts", "through", "the"]],
        "rev": ["struck", "by", "the"],
        "class30": "instrument",
        "class5": "participatory",
    },
}

# word -> [synonym with corpus support, second supported synonym, unsupported]
SYNONYMS = {
    "cat": ["feline", "tomcat", "mouser"],
    "meow": ["miaow", "mew", "purr"],
    "dog": ["hound", "mutt", "terrier"],
    "bark": ["woof", "yap", "howl"],
    "duck": ["drake", "mallard", "teal"],
    "quack": ["squawk", "cackle", "honk"],
    "cow": ["heifer", "bovine", "ox"],
    "moo": ["low", "bellow", "hum"],
    "sheep": ["ewe", "ram", "mutton"],
    "baa": ["bleat", "maa", "blat"],
    "lion": ["predator", "beast", "bigcat"],
    "roar": ["growl", "rumble", "snarl"],
    "pig": ["hog", "swine", "boar"],
    "oink": ["grunt", "snort", "squeal"],
    "frog": ["toad", "bullfrog", "newt"],
    "croak": ["ribbit", "chirp", "peep"],
    "mason": ["bricklayer", "stonemason", "builder"],
    "stone": ["rock", "granite", "marble"],
    "carpenter": ["woodworker", "joiner", "framer"],
    "wood": ["timber", "lumber", "plywood"],
    "blacksmith": ["smith", "metalworker", "farrier"],
    "iron": ["steel", "metal", "alloy"],
    "potter": ["ceramist", "sculptor", "artisan"],
    "clay": ["mud", "porcelain", "loam"],
    "tailor": ["seamstress", "dressmaker", "outfitter"],
    "cloth": ["fabric", "linen", "textile"],
    "baker": ["pastrycook", "confectioner", "cook"],
    "bread": ["loaf", "dough", "rye"],
    "bottle": ["flask", "vial", "decanter"],
    "water": ["liquid", "fluid", "brine"],
    "tank": ["cistern", "vat", "reservoir"],
    "fuel": ["petrol", "diesel", "kerosene"],
    "barrel": ["cask", "keg", "hogshead"],
    "wine": ["cider", "mead", "claret"],
    "jug": ["pitcher", "carafe", "ewer"],
    "milk": ["cream", "whey", "curd"],
    "kitten": ["kitty", "tabby", "stray"],
    "puppy": ["pup", "whelp", "mongrel"],
    "calf": ["yearling", "weanling", "steer"],
    "lamb": ["lambkin", "hogget", "shearling"],
    "cub": ["whelp", "youngster", "juvenile"],
    "hammer": ["mallet", "sledgehammer", "gavel"],
    "nail": ["spike", "tack", "rivet"],
    "axe": ["hatchet", "cleaver", "adze"],
    "log": ["stump", "trunk", "bough"],
    "drill": ["auger", "borer", "gimlet"],
    "hole": ["bore", "cavity", "hollow"],
    "saw": ["handsaw", "hacksaw", "ripsaw"],
    "timber": ["plank", "beam", "joist"],
}

WRAPPER_STARTS = ["the", "a", "every", "this", "that", "one", "some", "another"]
WRAPPER_ENDS = ["today", "now", "often", "again", "sometimes", "quietly", "daily", "twice"]

FILLER_VOCAB = """house garden river mountain cloud winter summer morning evening
road bridge window letter music market village harvest season weather
journey story lantern meadow forest valley castle harbor island desert
snow rain wind sun moon star field fence gate wall roof floor door
chair table basket candle mirror clock paper pencil carpet curtain
teacher student doctor farmer sailor singer painter writer keeper miller
walks reads opens closes carries brings finds keeps leaves takes gives
sees hears meets visits builds mends cleans fills empties lights""".split()

QUESTIONS = [
    ("cat meow", ["mason stone", "dog bark", "bottle water", "kitten cat", "hammer nail"], "b"),
    ("dog bark", ["duck quack", "carpenter wood", "tank fuel", "puppy dog", "axe log"], "a"),
    ("mason stone", ["cow moo", "barrel wine", "carpenter wood", "calf cow", "drill hole"], "c"),
    ("potter clay", ["sheep baa", "jug milk", "lamb sheep", "blacksmith iron", "hammer nail"], "d"),
    ("bottle water", ["lion roar", "tailor cloth", "cub lion", "axe log", "tank fuel"], "e"),
    ("barrel wine", ["jug milk", "pig oink", "baker bread", "kitten cat", "drill hole"], "a"),
    ("kitten cat", ["frog croak", "puppy dog", "mason stone", "bottle water", "saw timber"], "b"),
    ("calf cow", ["duck quack", "potter clay", "lamb sheep", "tank fuel", "hammer nail"], "c"),
    ("hammer nail", ["cat meow", "tailor cloth", "barrel wine", "axe log", "cub lion"], "d"),
    ("drill hole", ["cow moo", "baker bread", "jug milk", "puppy dog", "saw timber"], "e"),
]


def planted_sentences():
    """Yields (a, middle_tokens, b) windows wrapped into sentences."""
    sentences = []
    wrap_i = 0

    def emit(a, middle, b, times):
        nonlocal wrap_i
        for _ in range(times):
            start = WRAPPER_STARTS[wrap_i % len(WRAPPER_STARTS)]
            end = WRAPPER_ENDS[wrap_i % len(WRAPPER_ENDS)]
            wrap_i += 1
            sentences.append(f"{start} {a} {' '.join(middle)} {b} {end}.")

    for rel in RELATIONS.values():
        t1, t2, t3 = rel["fwd"]
        rev = rel["rev"]
        for i, (a, b) in enumerate(rel["pairs"]):
            a1, a2, _ = SYNONYMS[a]
            b1, b2, _ = SYNONYMS[b]
            # Original pair: counts vary per pair so profiles within a
            # relation are similar, not identical.
            emit(a, t1, b, 6 + i % 3)
            emit(a, t2, b, 5 + (i + 1) % 2)
            emit(a, t3, b, 4 + i % 2)
            emit(b, rev, a, 3 + (i + 2) % 3)
            # Alternates, distinct totals 5+d > 4+d > 3+d > 2 (tie-free
            # filtering; the weakest alternate is dropped by num_filter = 3).
            d = i % 2
            emit(a1, t1, b, 3 + d)
            emit(a1, t2, b, 2)
            emit(a, t1, b1, 2 + d)
            emit(a, t3, b1, 2)
            emit(a2, t2, b, 2 + d)
            emit(b, rev, a2, 1)
            emit(a, t1, b2, 1)
            emit(a, t3, b2, 1)
    return sentences


def filler_sentences(target_tokens):
    # Small deterministic LCG; no randomness enters the pipeline itself.
    state = 123456789
    def rand(n):
        nonlocal state
        state = (1103515245 * state + 12345) % (1 << 31)
        return state % n

    sentences = []
    tokens = 0
    while tokens < target_tokens:
        length = 6 + rand(7)
        words = [FILLER_VOCAB[rand(len(FILLER_VOCAB))] for _ in range(length)]
        sentences.append(" ".join(words) + ".")
        tokens += length
    return sentences


def check_stems():
    """Planted lexemes must have pairwise distinct stems, and filler words
    must not collide with any planted stem."""
    planted = set()
    for rel in RELATIONS.values():
        for a, b in rel["pairs"]:
            planted.update([a, b] + SYNONYMS[a] + SYNONYMS[b])
        for t in rel["fwd"]:
            planted.update(t)
        planted.update(rel["rev"])
    stems = {}
    pair_words = set()
    for rel in RELATIONS.values():
        for a, b in rel["pairs"]:
            pair_words.update([a, b] + SYNONYMS[a] + SYNONYMS[b])
    for w in sorted(pair_words):
        s = stem(w)
        if s in stems and stems[s] != w:
            raise SystemExit(f"stem collision: {w} vs {stems[s]} -> {s}")
        stems[s] = w
    other = set()
    for rel in RELATIONS.values():
        for t in rel["fwd"]:
            other.update(t)
        other.update(rel["rev"])
    other.update(FILLER_VOCAB)
    other.update(WRAPPER_STARTS)
    other.update(WRAPPER_ENDS)
    for w in sorted(other):
        if stem(w) in stems:
            raise SystemExit(f"filler/template word {w} collides with pair stem {stem(w)}")


def main():
    check_stems()
    os.makedirs(os.path.join(OUT_DIR, "corpus"), exist_ok=True)

    planted = planted_sentences()
    with open(os.path.join(OUT_DIR, "corpus", "relations.txt"), "w") as f:
        for i, s in enumerate(planted):
            f.write(s + ("\n" if (i + 1) % 4 == 0 else " "))
        f.write("\n")

    filler = filler_sentences(68000)
    with open(os.path.join(OUT_DIR, "corpus", "filler.txt"), "w") as f:
        for i, s in enumerate(filler):
            f.write(s + ("\n" if (i + 1) % 3 == 0 else " "))
        f.write("\n")

    with open(os.path.join(OUT_DIR, "thesaurus.tsv"), "w") as f:
        words = set()
        for rel in RELATIONS.values():
            for a, b in rel["pairs"]:
                words.update([a, b])
        for w in sorted(words):
            syn = SYNONYMS[w]
            entry = ", ".join(f"{s}:{0.9 - 0.1 * i:.2f}" for i, s in enumerate(syn))
            f.write(f"{w}\tnoun\t{entry}\n")

    with open(os.path.join(OUT_DIR, "sat_questions.txt"), "w") as f:
        for stem_pair, choices, answer in QUESTIONS:
            f.write(stem_pair + "\n")
            for c in choices:
                f.write(c + "\n")
            f.write(answer + "\n\n")

    with open(os.path.join(OUT_DIR, "noun_modifiers.csv"), "w") as f:
        f.write("modifier,head,class30,class5\n")
        for rel in RELATIONS.values():
            for a, b in rel["pairs"][:4]:
                f.write(f"{a},{b},{rel['class30']},{rel['class5']}\n")

    with open(os.path.join(OUT_DIR, "pairs.txt"), "w") as f:
        f.write("# every pair used by the fixture questions\n")
        seen = []
        for stem_pair, choices, _ in QUESTIONS:
            for p in [stem_pair] + choices:
                if p not in seen:
                    seen.append(p)
                    f.write(p.replace(" ", " ") + "\n")

    with open(os.path.join(OUT_DIR, "comparisons.txt"), "w") as f:
        f.write("# pair1 vs pair2, one comparison per line: a b c d\n")
        f.write("cat meow dog bark\n")
        f.write("cat meow mason stone\n")
        f.write("bottle water tank fuel\n")
        f.write("kitten cat puppy dog\n")

    n_tokens = 0
    for name in ("relations.txt", "filler.txt"):
        with open(os.path.join(OUT_DIR, "corpus", name)) as f:
            for line in f:
                n_tokens += len(line.replace(".", " ").split())
    print(f"planted sentences: {len(planted)}, filler sentences: {len(filler)}")
    print(f"approx corpus tokens: {n_tokens}")


if __name__ == "__main__":
    main()
