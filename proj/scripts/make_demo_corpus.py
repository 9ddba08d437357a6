#!/usr/bin/env python3
# Copyright 2026 The bdtweet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the synthetic demo corpus and its resource files to data/demo/."""

import argparse
import pathlib
import random

TERMS = [
    ("Down syndrome", ["down's syndrome", "trisomy 21", "downsyndrome"]),
    ("club foot", ["clubfoot", "club-foot"]),
    ("CHD", ["congenital heart defect"]),
    ("cleft palate", ["cleft lip"]),
    ("hydrocephalus", []),
    ("microcephaly", []),
    ("gastroschisis", []),
    ("dwarfism", []),
    ("trisomy 18", []),
    ("craniosynostosis", []),
    ("spina bifida", []),
]

NAMES = ["Emma", "Liam", "Olivia", "Noah", "Ava", "Mason", "Sophia", "Lucas",
         "Mia", "Ethan", "Grace", "Jack", "Lily", "Owen", "Ella", "Caleb"]

CHILD = ["son", "daughter", "baby", "boy", "girl", "kid", "toddler", "bby"]
POSS = ["my", "our", "My", "Our"]
EMOJI = ["\U0001F499", "\U0001F60A", "\U0001F476", "\U0001F49B", "❤️", ""]

DEFECT = [
    "{poss} {child} was born with {term} and is doing amazing {emoji}",
    "{poss} {child} has {term}. Surgery is next week, prayers please",
    "Proud of {poss} little {child}, {term} warrior {emoji} #{tag}",
    "{poss} {child} with {term} just took first steps!!! {emoji}",
    "We found out {poss} {child} has {term} at the 20 week scan",
    "Raising {poss} {child} with {term} taught me patience {emoji}",
    "Happy 2nd birthday to {poss} {child}, {term} cannot stop you",
    "Raising a {child} with {term} makes me dream of a more inclusive society",
    "Her face {emoji} #lovemy{child} #{tag}",
    "We were given no options other than termination {emoji} #{tag} {term}",
    "the decision I was forced to make for my unborn {child} was wrong, {term}",
]

POSSIBLE = [
    "{name} was diagnosed with {term} and had surgery to repair it.",
    "He has {term}.....I don't think he's special needs.",
    "I'm just in love w. this little {child}. {term}, survived {emoji}",
    "She has {term} and the doctors say she is strong",
    "They said it could be {term}, waiting on the next scan {emoji}",
    "{name} has {term}, please keep him in your thoughts",
    "this girl with {term} is the bravest person I know",
    "Born @ 25 weeks, {term}, narrow airway, missing vertebrae. Healed!",
    "They couldn't get a good picture, DR said it could be {term}.",
    "Thinking of little {name} today, {term} surgery went well",
]

NON_DEFECT = [
    "New study links {term} risk to maternal age {url}",
    "RT @{user}: {term} awareness month starts today {url}",
    "Learn the facts about {term} {url} #{tag}",
    "Great talk today on {term} research at the conference",
    "Donate to support families affected by {term} {url}",
    "{term} is more common than you think, read more {url}",
    "Our clinic now offers screening for {term}",
    "@{user} thanks for sharing the {term} article!",
    "Why do people still use {term} as an insult?? not ok",
    "Documentary about {term} airs tonight at 9 {emoji}",
    "Researchers identify gene linked to {term} {url}",
    "The {term} walk raised $5,000 this year {emoji} #{tag}",
    "Volunteering at the {term} support group again today",
    "Reading about {term} for my nursing exam, so much to learn",
    "Charity run for {term} this sunday, who is in?",
    "Podcast episode on living with {term} as an adult {url}",
    "Sooo tired after the {term} fundraiser !!! {emoji}",
    "Loved the panel on {term} and inclusive schools",
    "My heart goes out to every family facing {term} {emoji}",
    "Our {child}'s school hosted a talk about {term} today",
    "He talked about {term} in biology class, so interesting",
    "my cousin is fundraising for a {child} with {term} {url}",
    "Her doctor said {term} screening is routine now",
]

USERS = ["healthnews", "cdcgov", "mom_blog", "sci_daily", "parentclub",
         "dr_jones", "awareness_now"]


def slug(term):
  return "".join(ch for ch in term.lower() if ch.isalnum())


def pick_surface(rng, term, variants):
  options = [term] + [v for v in variants if " " in v or "-" in v or v.isalpha()]
  return rng.choice(options)


def render(rng, template, label):
  term, variants = rng.choice(TERMS)
  surface = pick_surface(rng, term, variants)
  if rng.random() < 0.3:
    surface = surface.lower()
  fields = {
      "poss": rng.choice(POSS),
      "child": rng.choice(CHILD),
      "name": rng.choice(NAMES),
      "emoji": rng.choice(EMOJI),
      "tag": rng.choice([slug(term), "proudmom", "blessed"]),
      "url": "https://t.co/" + "".join(rng.choice("abcdefghjkmnpqrstuvwxyz0123456789")
                                       for _ in range(8)),
      "user": rng.choice(USERS),
      "term": "\0",
  }
  text = template.format(**fields).strip()
  if text.startswith("\0"):
    surface = surface[0].upper() + surface[1:]
  prefix, _, suffix = text.partition("\0")
  start = len(prefix.encode("utf-8"))
  end = start + len(surface.encode("utf-8"))
  text = prefix + surface + suffix
  text = " ".join(text.split())
  # Recompute after whitespace squeezing; the term itself has no doubled spaces.
  start = text.encode("utf-8").find(surface.encode("utf-8"))
  end = start + len(surface.encode("utf-8"))
  return text, start, end


def build(seed):
  rng = random.Random(seed)
  rows = []
  # (label, own templates, count, confusable templates, confusion rate)
  plan = [("defect", DEFECT, 25, POSSIBLE, 0.2),
          ("possible_defect", POSSIBLE, 25, DEFECT + NON_DEFECT, 0.2),
          ("non_defect", NON_DEFECT, 450, POSSIBLE, 0.02)]
  seen = set()
  for label, templates, count, confusable, rate in plan:
    made = 0
    while made < count:
      pool = confusable if rng.random() < rate else templates
      text, start, end = render(rng, rng.choice(pool), label)
      if text in seen:
        continue
      seen.add(text)
      rows.append((label, text, start, end))
      made += 1
  rng.shuffle(rows)
  out = []
  for i, (label, text, start, end) in enumerate(rows, 1):
    user = "u%04d" % rng.randrange(1, 400)
    out.append(("t%04d" % i, user, label, text, start, end))
  return out


def write_corpus(path, rows):
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    f.write("id\tuser_id\tlabel\ttext\tspan_start\tspan_end\n")
    for r in rows:
      f.write("%s\t%s\t%s\t%s\t%d\t%d\n" % r)


def write_annotations(path, rows, seed):
  rng = random.Random(seed + 1)
  labels = ["defect", "possible_defect", "non_defect"]
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    f.write("id\tlabel_a\tlabel_b\n")
    for tid, _, label, _, _, _ in rows[:120]:
      a, b = label, label
      roll = rng.random()
      if roll < 0.06:
        b = rng.choice([l for l in labels if l != label])
      elif roll < 0.10:
        b = ""
      f.write("%s\t%s\t%s\n" % (tid, a, b))


def write_resources(out_dir):
  with open(out_dir / "lexicon.txt", "w", encoding="utf-8") as f:
    f.write("# canonical term|variant|variant\n")
    for term, variants in TERMS:
      f.write("|".join([term] + variants) + "\n")
  with open(out_dir / "names.txt", "w", encoding="utf-8") as f:
    for n in NAMES:
      f.write(n + "\n")
  clusters = [
      ("0010", ["son", "daughter", "baby", "bby", "babby", "boy", "girl", "kid"]),
      ("0011", ["toddler", "child", "newborn"]),
      ("0100", ["my", "our", "mah"]),
      ("0101", ["he", "she", "him", "her"]),
      ("1000", ["study", "research", "researchers", "article"]),
      ("1001", ["awareness", "charity", "fundraiser", "donate"]),
      ("1010", ["surgery", "scan", "doctors", "diagnosed"]),
      ("11100", ["amazing", "proud", "brave", "bravest", "strong"]),
  ]
  with open(out_dir / "clusters.txt", "w", encoding="utf-8") as f:
    count = 1000
    for path, tokens in clusters:
      for t in tokens:
        f.write("%s\t%s\t%d\n" % (path, t, count))
        count -= 7


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("--out-dir", default=str(
      pathlib.Path(__file__).resolve().parent.parent / "data" / "demo"))
  parser.add_argument("--seed", type=int, default=20260101)
  args = parser.parse_args()
  out_dir = pathlib.Path(args.out_dir)
  out_dir.mkdir(parents=True, exist_ok=True)
  rows = build(args.seed)
  write_corpus(out_dir / "corpus.tsv", rows)
  write_annotations(out_dir / "annotations.tsv", rows, args.seed)
  write_resources(out_dir)


if __name__ == "__main__":
  main()
