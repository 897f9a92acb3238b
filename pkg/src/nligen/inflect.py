"""Small rule-based English morphology: verb forms, noun plurals, number
words, indefinite articles. Built for caption-style text, not full coverage."""

from __future__ import annotations

VOWELS = "aeiou"

# lemma -> simple past. Participles are not needed: premises carry the form,
# we only ever re-inflect a lemma into the same slot.
IRREGULAR_PAST = {
    "arise": "arose", "awake": "awoke", "bear": "bore", "beat": "beat",
    "become": "became", "begin": "began", "bend": "bent", "bet": "bet",
    "bind": "bound", "bite": "bit", "bleed": "bled", "blow": "blew",
    "break": "broke", "breed": "bred", "bring": "brought", "build": "built",
    "burst": "burst", "buy": "bought", "cast": "cast", "catch": "caught",
    "choose": "chose", "cling": "clung", "come": "came", "cost": "cost",
    "creep": "crept", "cut": "cut", "deal": "dealt", "dig": "dug",
    "dive": "dove", "do": "did", "draw": "drew", "drink": "drank",
    "drive": "drove", "eat": "ate", "fall": "fell", "feed": "fed",
    "feel": "felt", "fight": "fought", "find": "found", "flee": "fled",
    "fling": "flung", "fly": "flew", "forbid": "forbade", "forget": "forgot",
    "forgive": "forgave", "freeze": "froze", "get": "got", "give": "gave",
    "go": "went", "grind": "ground", "grow": "grew", "hang": "hung",
    "have": "had", "hear": "heard", "hide": "hid", "hit": "hit",
    "hold": "held", "hurt": "hurt", "keep": "kept", "kneel": "knelt",
    "know": "knew", "lay": "laid", "lead": "led", "leap": "leapt",
    "leave": "left", "lend": "lent", "let": "let", "lie": "lay",
    "light": "lit", "lose": "lost", "make": "made", "mean": "meant",
    "meet": "met", "mistake": "mistook", "pay": "paid", "put": "put",
    "quit": "quit", "read": "read", "ride": "rode", "ring": "rang",
    "rise": "rose", "run": "ran", "say": "said", "see": "saw",
    "seek": "sought", "sell": "sold", "send": "sent", "set": "set",
    "shake": "shook", "shed": "shed", "shine": "shone", "shoot": "shot",
    "shrink": "shrank", "shut": "shut", "sing": "sang", "sink": "sank",
    "sit": "sat", "slay": "slew", "sleep": "slept", "slide": "slid",
    "sling": "slung", "speak": "spoke", "speed": "sped", "spend": "spent",
    "spin": "spun", "spit": "spat", "split": "split", "spread": "spread",
    "spring": "sprang", "stand": "stood", "steal": "stole", "stick": "stuck",
    "sting": "stung", "stink": "stank", "stride": "strode", "strike": "struck",
    "string": "strung", "strive": "strove", "swear": "swore", "sweep": "swept",
    "swim": "swam", "swing": "swung", "take": "took", "teach": "taught",
    "tear": "tore", "tell": "told", "think": "thought", "throw": "threw",
    "thrust": "thrust", "tread": "trod", "understand": "understood",
    "wake": "woke", "wear": "wore", "weave": "wove", "weep": "wept",
    "win": "won", "wind": "wound", "withdraw": "withdrew", "wring": "wrung",
    "write": "wrote",
}

IRREGULAR_PLURAL = {
    "man": "men", "woman": "women", "person": "people", "child": "children",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "sheep": "sheep", "deer": "deer", "fish": "fish", "ox": "oxen",
    "die": "dice", "louse": "lice",
}

# nouns that are already notionally plural with form == lemma
ALWAYS_PLURAL = {"people", "police", "cattle", "folk", "clothes"}

# -f/-fe nouns that take -ves
_F_TO_VES = {
    "leaf", "wolf", "knife", "life", "shelf", "calf", "half", "loaf",
    "thief", "wife", "elf", "scarf",
}

# -o nouns that take -es
_O_TO_ES = {"potato", "tomato", "hero", "echo", "veto", "torpedo"}

_AN_EXCEPTIONS = {"hour", "honest", "honor", "honour", "heir"}
_A_EXCEPTIONS_PREFIX = ("uni", "use", "eu", "one", "ubiq")


def pluralize(noun: str) -> str:
    w = noun.lower()
    if w in IRREGULAR_PLURAL:
        return IRREGULAR_PLURAL[w]
    if w in ALWAYS_PLURAL:
        return w
    if w in _F_TO_VES:
        if w.endswith("fe"):
            return w[:-2] + "ves"
        return w[:-1] + "ves"
    if w.endswith(("s", "ss", "sh", "ch", "x", "z")):
        return w + "es"
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ies"
    if w in _O_TO_ES:
        return w + "es"
    # multiword entries pluralize the final word
    if " " in w:
        head, _, tail = w.rpartition(" ")
        return f"{head} {pluralize(tail)}"
    return w + "s"


def _doubles_final_consonant(lemma: str) -> bool:
    # short CVC stems double before -ed/-ing (stop -> stopped); longer stems
    # usually don't and we accept the occasional miss (visit -> visited is fine)
    if len(lemma) < 3 or len(lemma) > 4:
        return False
    a, b, c = lemma[-3], lemma[-2], lemma[-1]
    return (c not in VOWELS + "wxy") and (b in VOWELS) and (a not in VOWELS)


def present_3sg(lemma: str) -> str:
    w = lemma.lower()
    if w == "be":
        return "is"
    if w == "have":
        return "has"
    if w == "do":
        return "does"
    if w == "go":
        return "goes"
    if w.endswith(("s", "ss", "sh", "ch", "x", "z", "o")):
        return w + "es"
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ies"
    return w + "s"


def past_tense(lemma: str) -> str:
    w = lemma.lower()
    if w in IRREGULAR_PAST:
        return IRREGULAR_PAST[w]
    if w.endswith("e"):
        return w + "d"
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ied"
    if _doubles_final_consonant(w):
        return w + w[-1] + "ed"
    return w + "ed"


def progressive(lemma: str) -> str:
    w = lemma.lower()
    if w.endswith("ie"):
        return w[:-2] + "ying"
    if w.endswith("e") and not w.endswith(("ee", "oe", "ye")) and w != "be":
        return w[:-1] + "ing"
    if _doubles_final_consonant(w):
        return w + w[-1] + "ing"
    return w + "ing"


def classify_verb_form(form: str, lemma: str) -> str | None:
    """Which slot ``form`` fills for ``lemma``: base | 3sg | past | ing.

    Returns None when the form matches no generated slot (e.g. participles
    like "taken", or a lemma/form mismatch)."""
    f = form.lower()
    w = lemma.lower()
    if w == "be":
        return {"be": "base", "is": "3sg", "am": "base", "are": "base",
                "was": "past", "were": "past", "being": "ing"}.get(f)
    if f == w:
        return "base"
    if f == progressive(w):
        return "ing"
    if f == past_tense(w):
        return "past"
    if f == present_3sg(w):
        return "3sg"
    return None


def inflect_verb(lemma: str, slot: str) -> str:
    if slot == "base":
        return lemma.lower()
    if slot == "3sg":
        return present_3sg(lemma)
    if slot == "past":
        return past_tense(lemma)
    if slot == "ing":
        return progressive(lemma)
    raise ValueError(f"unknown verb slot {slot!r}")


def match_capitalization(model: str, word: str) -> str:
    """Give ``word`` the same initial capitalization as ``model``."""
    if model[:1].isupper():
        return word[:1].upper() + word[1:]
    return word


def indefinite_article(word: str) -> str:
    w = word.lower()
    if any(w.startswith(x) for x in _A_EXCEPTIONS_PREFIX):
        return "a"
    if w in _AN_EXCEPTIONS or (w[:1] in VOWELS):
        return "an"
    return "a"


NUMBER_WORDS = [
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty",
]
_WORD_TO_VALUE = {w: i + 1 for i, w in enumerate(NUMBER_WORDS)}


def parse_count(text: str) -> int | None:
    """Read a count token: a digit string or a number word one..twenty."""
    t = text.lower()
    if t in _WORD_TO_VALUE:
        return _WORD_TO_VALUE[t]
    if t.isdigit():
        return int(t)
    return None


def render_count(value: int, style: str = "word") -> str:
    """Render a count; word style falls back to digits above twenty."""
    if style == "word" and 1 <= value <= len(NUMBER_WORDS):
        return NUMBER_WORDS[value - 1]
    return str(value)
