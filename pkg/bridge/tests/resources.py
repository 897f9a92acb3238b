"""Builders for the lexical-resource fixtures and the demo corpus.

The WordNet files follow the database layout exactly (hex word counts,
pointer quadruples, frame fields on verb lines, license header). The
embedding fixture is engineered geometry: each cluster shares one axis
and every word adds private noise, so same-cluster cosines sit in a
chosen band, cross-cluster cosines are zero, and the violin/viola pair
lands above 0.9 to exercise the similarity drop.
"""

from __future__ import annotations

import random
import re
from pathlib import Path

NOUN_CLUSTERS = {
    "animal": ["dog", "cat", "bird", "horse", "cow", "sheep"],
    "person": ["man", "woman", "teacher", "farmer", "musician"],
    "child": ["boy", "girl"],
    "vehicle": ["car", "truck", "bus", "bike", "train", "boat"],
    "fruit": ["apple", "banana", "pear"],
    "furniture": ["table", "chair", "bench"],
    "instrument": ["violin", "viola", "piano", "flute", "drum", "guitar"],
    "place": ["park", "garden", "kitchen", "field", "street", "river", "lake", "hill"],
    "structure": ["house", "fence", "wall", "barn", "station"],
    "plant": ["tree", "flower", "bush"],
    "container": ["basket", "box", "cup", "plate"],
    "object": ["book", "mat", "rug", "ball", "hat", "window", "door"],
}

VERB_CLUSTERS = {
    "rest": ["sleep", "doze", "nap", "rest"],
    "motion": ["run", "walk", "jump", "gallop", "trot", "stroll", "race"],
    "posture": ["sit", "stand"],
    "transport": ["ride", "drive", "fly"],
    "feeding": ["eat", "graze"],
    "performance": ["play", "sing", "dance"],
    "handling": ["hold", "carry"],
    "attention": ["watch", "chase"],
    "sound": ["bark", "chirp"],
    "misc": ["wait", "smile", "climb", "swim", "park", "wave"],
}

ANTONYM_ADJS = [
    (["big", "large"], ["small", "little"]),
    (["old"], ["young"]),
    (["dark"], ["bright"]),
    (["warm"], ["cold"]),
    (["happy"], ["sad"]),
    (["tall"], ["short"]),
    (["empty"], ["full"]),
    (["quiet"], ["loud"]),
    (["clean"], ["dirty(p)"]),
]
PLAIN_ADJS = [
    "black", "white", "brown", "red", "green", "blue", "yellow", "wooden",
    "shiny", "muddy", "sandy", "fluffy", "tiny", "busy", "sleepy", "gentle",
]

LICENSE_HEADER = "  1 This file is fixture data in the database layout.\n  2 It carries no license restrictions.\n"


def _synset_line(offset, ss_type, words, pointers, frames=False):
    parts = [offset, "05", ss_type, f"{len(words):02x}"]
    for w in words:
        parts += [w, "0"]
    parts.append(f"{len(pointers):03d}")
    for sym, t_off, t_pos, st in pointers:
        parts += [sym, t_off, t_pos, st]
    if frames:
        parts += ["02", "+", "02", "00", "+", "08", "00"]
    return " ".join(parts) + " | a gloss for " + words[0]


def write_wordnet(root: Path) -> Path:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)

    # nouns: one synset per word, @ pointing to the cluster-name synset
    noun_names = []
    for cluster, members in NOUN_CLUSTERS.items():
        noun_names.append((cluster, None))
        for m in members:
            noun_names.append((m, cluster))
    offsets = {name: f"{i + 1:08d}" for i, (name, _) in enumerate(noun_names)}
    lines = []
    for name, hyper in noun_names:
        words = [name]
        if name == "dog":
            words.append("domestic_dog")
        pointers = []
        if hyper:
            pointers.append(("@", offsets[hyper], "n", "0000"))
        lines.append(_synset_line(offsets[name], "n", words, pointers))
    (root / "data.noun").write_text(LICENSE_HEADER + "\n".join(lines) + "\n")

    # verbs: sleep and doze share one synset; sit/stand are antonyms
    verb_synsets = []
    for cluster, members in VERB_CLUSTERS.items():
        for m in members:
            if m == "doze":
                continue
            verb_synsets.append([m, "doze"] if m == "sleep" else [m])
    v_offsets = {ws[0]: f"{i + 1:08d}" for i, ws in enumerate(verb_synsets)}
    lines = []
    for ws in verb_synsets:
        pointers = []
        if ws[0] == "sit":
            pointers.append(("!", v_offsets["stand"], "v", "0101"))
        if ws[0] == "stand":
            pointers.append(("!", v_offsets["sit"], "v", "0101"))
        lines.append(_synset_line(v_offsets[ws[0]], "v", ws, pointers, frames=True))
    (root / "data.verb").write_text(LICENSE_HEADER + "\n".join(lines) + "\n")

    # adjectives: antonym pairs plus plain words; one satellite synset
    adj_synsets = [list(a) for pair in ANTONYM_ADJS for a in pair]
    adj_synsets += [[a] for a in PLAIN_ADJS]
    a_offsets = {ws[0]: f"{i + 1:08d}" for i, ws in enumerate(adj_synsets)}
    lines = []
    for ws in adj_synsets:
        pointers = []
        for left, right in ANTONYM_ADJS:
            if ws[0] == left[0]:
                pointers.append(("!", a_offsets[right[0]], "a", "0101"))
            elif ws[0] == right[0]:
                pointers.append(("!", a_offsets[left[0]], "a", "0101"))
        lines.append(_synset_line(a_offsets[ws[0]], "a", ws, pointers))
    lines.append(_synset_line(f"{len(adj_synsets) + 1:08d}", "s", ["enormous"], []))
    (root / "data.adj").write_text(LICENSE_HEADER + "\n".join(lines) + "\n")
    return root


# noise coefficient per word: cosine(a, b) = 1 / (sqrt(1+ea^2) sqrt(1+eb^2))
# within a cluster. 0.85 keeps regular pairs near 0.58-0.73; violin/viola
# (0.3, 0.35) land at about 0.90.
NOISE_OVERRIDES = {"violin": 0.3, "viola": 0.35}
DEFAULT_NOISE = 0.85


def write_embeddings(path: Path) -> Path:
    clusters = {**NOUN_CLUSTERS, **VERB_CLUSTERS}
    words = [w for members in clusters.values() for w in members]
    dim = len(clusters) + len(words)
    rows = []
    word_axis = len(clusters)
    for ci, (_name, members) in enumerate(clusters.items()):
        for m in members:
            vec = [0.0] * dim
            vec[ci] = 1.0
            vec[word_axis + words.index(m)] = NOISE_OVERRIDES.get(m, DEFAULT_NOISE)
            rows.append((m, vec))
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(rows)} {dim}\n")
        for w, vec in rows:
            fh.write(w + " " + " ".join(f"{x:.6f}" for x in vec) + "\n")
    return path


CONCEPTNET_FACTS = [
    ("AtLocation", "dog", "yard", 2.0),
    ("AtLocation", "cat", "sofa", 2.0),
    ("AtLocation", "bird", "nest", 2.0),
    ("AtLocation", "horse", "stable", 2.0),
    ("AtLocation", "cow", "barn", 2.0),
    ("AtLocation", "sheep", "meadow", 1.0),
    ("AtLocation", "car", "garage", 2.0),
    ("AtLocation", "truck", "depot", 1.0),
    ("AtLocation", "bus", "station", 2.0),
    ("AtLocation", "boat", "harbor", 2.0),
    ("AtLocation", "train", "station", 2.0),
    ("AtLocation", "book", "shelf", 2.0),
    ("AtLocation", "apple", "bowl", 1.0),
    ("AtLocation", "banana", "basket", 1.0),
    ("AtLocation", "violin", "case", 2.0),
    ("AtLocation", "piano", "hall", 1.0),
    ("AtLocation", "table", "room", 1.0),
    ("AtLocation", "chair", "corner", 1.0),
    ("AtLocation", "man", "office", 1.0),
    ("AtLocation", "woman", "office", 1.0),
    ("AtLocation", "boy", "school", 2.0),
    ("AtLocation", "girl", "school", 2.0),
    ("AtLocation", "teacher", "school", 2.5),
    ("AtLocation", "farmer", "barn", 1.5),
    ("AtLocation", "tree", "forest", 2.0),
    ("AtLocation", "flower", "vase", 1.0),
    ("HasA", "car", "engine", 2.0),
    ("HasA", "bike", "wheel", 2.0),
    ("HasA", "house", "roof", 2.0),
    ("HasA", "dog", "tail", 2.0),
    ("HasA", "bird", "wing", 2.0),
    ("HasA", "book", "page", 2.0),
    ("HasA", "tree", "branch", 2.0),
    ("UsedFor", "cup", "drinking", 2.0),
    ("UsedFor", "chair", "sitting", 2.0),
    ("UsedFor", "bus", "travel", 1.0),
    ("UsedFor", "violin", "music", 2.0),
    ("UsedFor", "piano", "music", 2.0),
    ("UsedFor", "basket", "storage", 1.0),
    ("MadeOf", "table", "wood", 2.0),
    ("MadeOf", "fence", "wood", 2.0),
    ("MadeOf", "wall", "brick", 2.0),
    ("MadeOf", "cup", "glass", 1.0),
    ("CapableOf", "dog", "bark", 2.0),
    ("CapableOf", "bird", "fly", 2.0),
    ("CapableOf", "horse", "gallop", 2.0),
]


def write_conceptnet(path: Path) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for rel, start, end, weight in CONCEPTNET_FACTS:
            fh.write(
                f"/a/[/r/{rel}/,/c/en/{start}/,/c/en/{end}/]\t/r/{rel}"
                f"\t/c/en/{start}\t/c/en/{end}\t{{\"weight\": {weight}}}\n"
            )
        # material the reader must ignore or normalize
        fh.write("/a/x\t/r/RelatedTo\t/c/en/dog\t/c/en/cat\t{\"weight\": 1.0}\n")
        fh.write("/a/x\t/r/AtLocation\t/c/fr/chien\t/c/fr/niche\t{\"weight\": 1.0}\n")
        fh.write("/a/x\t/r/AtLocation\t/c/en/fire_truck\t/c/en/fire_station\t{\"weight\": 1.0}\n")
        fh.write("/a/x\t/r/AtLocation\t/c/en/piano\t/c/en/concert_hall\t{\"weight\": 3.0}\n")
        fh.write("bad line without enough columns\n")
    return path


# ---------------------------------------------------------------- corpus

IRREGULAR_PLURALS = {"man": "men", "woman": "women", "sheep": "sheep"}
ING_IRREGULAR = {"lie": "lying", "die": "dying", "tie": "tying"}
VOWELS = "aeiou"


def plural(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


def ing_form(verb: str) -> str:
    if verb in ING_IRREGULAR:
        return ING_IRREGULAR[verb]
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    if (
        len(verb) >= 3
        and len(re.findall(r"[aeiouy]+", verb)) == 1
        and verb[-1] not in VOWELS + "wxy"
        and verb[-2] in VOWELS
        and verb[-3] not in VOWELS
    ):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def third_person(verb: str) -> str:
    if verb == "have":
        return "has"
    if verb in ("go", "do"):
        return verb + "es"
    if verb.endswith("y") and verb[-2] not in VOWELS:
        return verb[:-1] + "ies"
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    return verb + "s"


def indefinite(phrase: str) -> str:
    return ("an " if phrase[0] in VOWELS else "a ") + phrase


PEOPLE = NOUN_CLUSTERS["person"] + NOUN_CLUSTERS["child"]
ANIMALS = NOUN_CLUSTERS["animal"]
VEHICLES = NOUN_CLUSTERS["vehicle"]
ADJ_PERSON = ["happy", "young", "old", "tall", "busy", "quiet", "gentle", "sleepy", "little"]
ADJ_ANIMAL = [
    "big", "small", "old", "young", "black", "white", "brown", "fluffy",
    "gentle", "sleepy", "tiny", "happy", "quiet",
]
ADJ_THING = [
    "big", "small", "old", "new", "red", "green", "blue", "yellow", "black",
    "white", "brown", "shiny", "muddy", "wooden", "tiny", "large", "little",
    "dark", "long",
]
ADJ_SETTING = ["quiet", "sandy", "muddy", "green", "old", "busy", "warm", "dark", "big", "small"]

# settings paired with the prepositions that read naturally before them
SETTING_PREPS = {
    "park": ["in", "near", "by", "at"], "garden": ["in", "near", "by", "at"],
    "kitchen": ["in", "near", "by"], "field": ["in", "near", "by", "at"],
    "street": ["in", "near", "by", "at"], "station": ["near", "by", "behind", "at"],
    "barn": ["in", "near", "by", "behind", "at"], "house": ["in", "near", "by", "behind", "at"],
    "river": ["in", "near", "by"], "lake": ["in", "near", "by", "at"],
    "hill": ["on", "near", "by", "behind"], "table": ["on", "near", "under", "by"],
    "bench": ["on", "near", "under", "by", "behind"],
    "tree": ["near", "by", "behind", "beside", "under"],
    "fence": ["near", "by", "behind", "beside"], "wall": ["near", "by", "behind", "beside"],
}


def _adj_for(noun: str) -> list[str]:
    if noun in PEOPLE:
        return ADJ_PERSON
    if noun in ANIMALS:
        return ADJ_ANIMAL
    return ADJ_THING


INTRANS_BY_SUBJECT = {
    "animal": ["sleep", "run", "walk", "sit", "stand", "jump", "rest", "doze", "nap", "wait"],
    "person": ["walk", "run", "dance", "sing", "smile", "wait", "stroll", "rest", "swim", "climb"],
}
TRANSITIVE = [
    ("play", NOUN_CLUSTERS["instrument"], PEOPLE),
    ("read", ["book"], PEOPLE),
    ("eat", NOUN_CLUSTERS["fruit"], PEOPLE + ANIMALS),
    ("hold", ["cup", "book", "ball", "hat", "plate"], PEOPLE),
    ("carry", ["basket", "box", "ball"], PEOPLE),
    ("watch", ANIMALS, PEOPLE),
    ("chase", ["ball", "cat", "bird"], ANIMALS),
    ("ride", ["horse", "bike"], PEOPLE),
]
PLURAL_SAFE = ANIMALS[:5] + ["boy", "girl", "man", "woman"] + VEHICLES[:4]
NUM_WORDS = ["Two", "Three", "Four", "Five"]


def _pp(rng: random.Random, with_adj: bool = False) -> str:
    setting = rng.choice(list(SETTING_PREPS))
    prep = rng.choice(SETTING_PREPS[setting])
    if with_adj and rng.random() < 0.6:
        return f"{prep} the {rng.choice(ADJ_SETTING)} {setting}"
    return f"{prep} the {setting}"


def _subject(rng: random.Random) -> tuple[str, str]:
    if rng.random() < 0.5:
        return rng.choice(ANIMALS), "animal"
    return rng.choice(PEOPLE), "person"


def _sentence(rng: random.Random) -> str:
    t = rng.randrange(8)
    if t == 0:  # progressive with PP
        subj, kind = _subject(rng)
        adj = rng.choice(_adj_for(subj))
        verb = rng.choice(INTRANS_BY_SUBJECT[kind])
        return f"{indefinite(adj + ' ' + subj).capitalize()} is {ing_form(verb)} {_pp(rng, True)}."
    if t == 1:  # existential
        subj, kind = _subject(rng)
        adj = rng.choice(_adj_for(subj))
        verb = rng.choice(INTRANS_BY_SUBJECT[kind])
        return f"There is {indefinite(adj + ' ' + subj)} {ing_form(verb)} {_pp(rng)}."
    if t == 2:  # plural progressive
        subj = rng.choice(PLURAL_SAFE)
        kind = "animal" if subj in ANIMALS else "person"
        verb = rng.choice(INTRANS_BY_SUBJECT[kind] if subj not in VEHICLES else ["wait", "race"])
        return f"{rng.choice(NUM_WORDS)} {plural(subj)} are {ing_form(verb)} {_pp(rng)}."
    if t == 3:  # bare progressive
        subj, kind = _subject(rng)
        adj = rng.choice(_adj_for(subj))
        verb = rng.choice(INTRANS_BY_SUBJECT[kind])
        return f"{indefinite(adj + ' ' + subj).capitalize()} is {ing_form(verb)}."
    if t == 4:  # passive
        subj = rng.choice(VEHICLES)
        adj = rng.choice(ADJ_THING)
        return f"{indefinite(adj + ' ' + subj).capitalize()} is parked {_pp(rng, True)}."
    if t == 5:  # transitive simple present
        verb, objs, subjs = rng.choice(TRANSITIVE)
        subj = rng.choice(subjs)
        adj = rng.choice(_adj_for(subj))
        return (
            f"The {adj} {subj} {third_person(verb)} "
            f"{indefinite(rng.choice(objs))} {_pp(rng)}."
        )
    if t == 6:  # coordinated subject
        a, b = rng.sample(PEOPLE + ANIMALS, 2)
        verb = rng.choice(["walk", "run", "wait", "rest"])
        return f"{indefinite(a).capitalize()} and {indefinite(b)} are {ing_form(verb)} {_pp(rng)}."
    verb, objs, subjs = rng.choice(TRANSITIVE)  # transitive progressive
    subj = rng.choice(subjs)
    adj = rng.choice(_adj_for(subj))
    return (
        f"{indefinite(adj + ' ' + subj).capitalize()} is "
        f"{ing_form(verb)} {indefinite(rng.choice(objs))} {_pp(rng)}."
    )


def write_corpus(out_dir: Path, n_sentences: int = 2100, seed: int = 7, docs: int = 4) -> list[Path]:
    rng = random.Random(seed)
    seen: set[str] = set()
    sentences: list[str] = []
    while len(sentences) < n_sentences:
        s = _sentence(rng)
        if s not in seen:
            seen.add(s)
            sentences.append(s)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    per_doc = (n_sentences + docs - 1) // docs
    for d in range(docs):
        chunk = sentences[d * per_doc : (d + 1) * per_doc]
        paragraphs = [
            " ".join(chunk[i : i + 12]) for i in range(0, len(chunk), 12)
        ]
        p = out_dir / f"story_{d + 1}.txt"
        p.write_text("\n\n".join(paragraphs) + "\n", encoding="utf-8")
        paths.append(p)
    return paths
