#!/usr/bin/env python3
"""Generate the bundled Abt-Buy-style fixture (left = abt, right = buy).

The left table is duplicate-free. Some left products come in sibling
families that differ only in screen size or model suffix, which makes for
hard negatives. The right table lists a reworded copy of most left products
plus products that exist only on the right. matches.csv holds the planted
ground truth. Output is deterministic for a given --seed.
"""
import argparse
import csv
import random
from pathlib import Path

BRANDS = ["Sony", "Samsung", "Panasonic", "LG", "Toshiba", "Sharp", "Philips", "Pioneer",
          "Canon", "Nikon", "Bose", "Garmin", "Logitech", "Yamaha", "Onkyo", "Denon",
          "Olympus", "Kodak", "JVC", "Vizio"]

CATEGORIES = {
    "tv": (["LCD HDTV", "Plasma HDTV", "LED HDTV"], True, ["1080p", "120Hz", "HDMI", "widescreen", "flat panel"]),
    "camera": (["Digital Camera", "Digital SLR Camera", "Camcorder"], False, ["megapixel", "optical zoom", "image stabilization", "LCD screen"]),
    "audio": (["Home Theater System", "AV Receiver", "Bookshelf Speakers", "Soundbar"], False, ["surround sound", "Dolby Digital", "subwoofer", "wireless"]),
    "gps": (["Portable GPS Navigator", "GPS Receiver"], False, ["touchscreen", "maps", "text-to-speech", "bluetooth"]),
    "accessory": (["Wireless Mouse", "Keyboard", "Headphones", "Universal Remote"], False, ["ergonomic", "USB", "rechargeable", "noise cancelling"]),
}
COLORS = ["Black", "Silver", "White", "Red", "Blue"]
SIZES = [26, 32, 37, 40, 42, 46, 50, 52]


def model_code(rng):
    letters = "".join(rng.choice("ABCDEFGHJKLMNPRSTVXZ") for _ in range(rng.randint(2, 3)))
    return f"{letters}{rng.randint(10, 999)}{rng.choice(['', 'S', 'B', 'X'])}"


def make_left(rng, n):
    products = []
    codes = set()

    def fresh_code():
        while True:
            c = model_code(rng)
            if c not in codes:
                codes.add(c)
                return c

    while len(products) < n:
        cat = rng.choice(list(CATEGORIES))
        kinds, sized, features = CATEGORIES[cat]
        brand = rng.choice(BRANDS)
        kind = rng.choice(kinds)
        family = rng.randint(1, 3) if sized else rng.choice([1, 1, 1, 2])
        sizes = rng.sample(SIZES, family) if sized else [None] * family
        feats = rng.sample(features, 2)
        base_price = rng.uniform(30, 2500)
        for size in sizes:
            code = fresh_code()
            name = f"{brand} {f'{size}' + chr(39) + ' ' if size else ''}{kind} {code}"
            desc = f"{brand} {kind} {code} with {feats[0]} and {feats[1]}"
            if size:
                desc += f", {size} inch screen"
            price = base_price * (size / 40 if size else rng.uniform(0.8, 1.2))
            products.append({"brand": brand, "kind": kind, "code": code, "size": size,
                             "feats": feats, "name": name, "description": desc,
                             "price": f"{price:.2f}"})
            if len(products) == n:
                break
    return products


def reword(rng, p):
    code = p["code"]
    if rng.random() < 0.3:
        code = code[:2] + "-" + code[2:]
    words = p["kind"].split()
    if rng.random() < 0.5 and len(words) > 1:
        words = words[-1:] if rng.random() < 0.5 else words[:-1] + [words[-1]]
    parts = [p["brand"], code]
    if p["size"]:
        parts.insert(1, f"{p['size']}{chr(39)}")
    parts += words
    if rng.random() < 0.4:
        parts.append("- " + rng.choice(COLORS))
    if rng.random() < 0.3:
        parts.insert(0, parts.pop(1))
    name = " ".join(parts)
    desc = f"{' '.join(words)} by {p['brand']}: {p['feats'][1]}, {p['feats'][0]}" if rng.random() < 0.7 else ""
    price = float(p["price"]) * rng.uniform(0.9, 1.1)
    return {"name": name, "description": desc, "price": f"{price:.2f}" if rng.random() < 0.85 else ""}


def right_only(rng, codes):
    cat = rng.choice(list(CATEGORIES))
    kinds, sized, features = CATEGORIES[cat]
    brand = rng.choice(BRANDS)
    kind = rng.choice(kinds)
    while True:
        code = model_code(rng)
        if code not in codes:
            codes.add(code)
            break
    size = rng.choice(SIZES) if sized else None
    name = f"{brand} {f'{size}' + chr(39) + ' ' if size else ''}{code} {kind}"
    feats = rng.sample(features, 2)
    return {"name": name, "description": f"{kind} with {feats[0]}",
            "price": f"{rng.uniform(30, 2500):.2f}"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20)
    ap.add_argument("--left", type=int, default=200)
    ap.add_argument("--matched", type=int, default=130)
    ap.add_argument("--right-only", type=int, default=70)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "fixture")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    left = make_left(rng, args.left)
    codes = {p["code"] for p in left}
    matched = rng.sample(range(len(left)), args.matched)
    right_rows = [(reword(rng, left[i]), i) for i in matched]
    right_rows += [(right_only(rng, codes), None) for _ in range(args.right_only)]
    rng.shuffle(right_rows)

    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "abt.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["id", "name", "description", "price"])
        for i, p in enumerate(left):
            w.writerow([f"a{i}", p["name"], p["description"], p["price"]])
    with open(args.out / "buy.csv", "w", newline="") as f, open(args.out / "matches.csv", "w", newline="") as g:
        w = csv.writer(f)
        m = csv.writer(g)
        w.writerow(["id", "name", "description", "price"])
        m.writerow(["left_id", "right_id"])
        for j, (row, src) in enumerate(right_rows):
            w.writerow([f"b{j}", row["name"], row["description"], row["price"]])
            if src is not None:
                m.writerow([f"a{src}", f"b{j}"])


if __name__ == "__main__":
    main()
