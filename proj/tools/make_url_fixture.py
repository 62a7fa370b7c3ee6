#!/usr/bin/env python3
"""Generate the bundled DMOZ-style labeled URL sample (data/dmoz_sample.csv).

URLs are composed from per-category topic words, words shared across
categories, multi-word phrases whose individual words are shared, and opaque
brand-like host names, so that no single token decides the class. Output is
deterministic for a given --seed.
"""

import argparse
import random

CATEGORIES = {
    "Arts": {
        "words": ["art", "music", "film", "movies", "anime", "gallery", "painting", "theatre",
                  "poetry", "cartoon", "photography", "dance", "literature", "artist", "museum",
                  "band", "sculpture", "comics", "opera", "design"],
        "phrases": [("fan", "fiction"), ("free", "music"), ("online", "gallery"),
                    ("live", "show"), ("studio", "album"), ("short", "stories")],
    },
    "Business": {
        "words": ["business", "finance", "jobs", "marketing", "consulting", "insurance", "bank",
                  "trade", "invest", "accounting", "realestate", "careers", "industrial",
                  "logistics", "management", "export", "retail", "capital", "tax", "legal"],
        "phrases": [("free", "quote"), ("online", "store"), ("small", "business"),
                    ("live", "market"), ("studio", "rental"), ("short", "term")],
    },
    "Computers": {
        "words": ["software", "linux", "programming", "code", "computer", "hardware", "java",
                  "security", "network", "database", "python", "internet", "drive", "cloud",
                  "server", "developer", "opensource", "algorithm", "unix", "web"],
        "phrases": [("free", "download"), ("online", "tools"), ("source", "code"),
                    ("live", "cd"), ("studio", "ide"), ("short", "url")],
    },
    "Games": {
        "words": ["games", "game", "play", "puzzle", "chess", "rpg", "arcade", "gamer",
                  "cheats", "console", "mmorpg", "poker", "cards", "strategy", "nintendo",
                  "playstation", "xbox", "quest", "multiplayer", "walkthrough"],
        "phrases": [("free", "play"), ("online", "game"), ("fan", "site"),
                    ("live", "stream"), ("studio", "games"), ("short", "levels")],
    },
}

SHARED = ["online", "free", "home", "news", "info", "world", "best", "top", "club", "center",
          "guide", "page", "net", "site", "official", "group", "live", "studio", "review",
          "forum", "index", "about", "fan", "short", "source", "small", "new", "pro"]
TLDS = ["com", "com", "com", "org", "net", "co.uk", "de", "info", "ca", "com.au"]
SYLLABLES = ["ka", "zo", "mi", "ru", "te", "lo", "va", "ne", "qui", "bra", "sto", "fen",
             "gar", "lin", "mor", "pex", "tor", "vin", "dex", "sa"]


def brand(rng):
    return "".join(rng.choice(SYLLABLES) for _ in range(rng.randint(2, 3)))


def topic_word(rng, category, p_own):
    if rng.random() < p_own:
        return rng.choice(CATEGORIES[category]["words"])
    if rng.random() < 0.35:
        other = rng.choice([c for c in CATEGORIES if c != category])
        return rng.choice(CATEGORIES[other]["words"])
    return rng.choice(SHARED)


def make_url(rng, category):
    scheme = rng.choice(["http://", "http://www.", "https://www.", "https://"])
    style = rng.random()
    if style < 0.35:
        host = brand(rng)
    elif style < 0.7:
        host = topic_word(rng, category, 0.6) + rng.choice(["", brand(rng)])
    else:
        host = topic_word(rng, category, 0.55) + "-" + topic_word(rng, category, 0.4)
    url = f"{scheme}{host}.{rng.choice(TLDS)}/"

    segments = []
    for _ in range(rng.choice([0, 1, 1, 2, 2, 3])):
        if rng.random() < 0.3:
            a, b = rng.choice(CATEGORIES[category]["phrases"])
            segments.append(f"{a}-{b}")
        else:
            segments.append(topic_word(rng, category, 0.45))
    if segments:
        url += "/".join(segments) + rng.choice(["/", "", ".html", ".htm"])
    return url


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--per-category", type=int, default=400)
    parser.add_argument("--seed", type=int, default=2018)
    parser.add_argument("--out", default="data/dmoz_sample.csv")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    rows = [(make_url(rng, c), c) for c in CATEGORIES for _ in range(args.per_category)]
    rng.shuffle(rows)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write("url,category\n")
        for url, category in rows:
            f.write(f"{url},{category}\n")


if __name__ == "__main__":
    main()
