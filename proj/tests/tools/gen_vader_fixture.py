# Copyright 2026 the emores authors
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy of
# the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.
"""Generates tests/fixtures/vader_oracle.tsv from the reference scorer.

Run from the repository root:

    python3 tests/tools/gen_vader_fixture.py

The fixture freezes 200 sentences with full-precision expected compound
scores and a matched/no-match flag. Sentences are chosen to exercise every
rule path: negation at distances 1-3, "never so/this", "without doubt",
"no"-forms, boosters with distance damping, ALL-CAPS differential, the
"but" pass (including duplicate-value layouts), special-case idioms,
"least" forms, exclamation/question emphasis at and past the caps, kept
short tokens with trailing punctuation, emoticons, and no-match texts.
"""

import random
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from vader_reference import SentimentIntensityAnalyzer  # noqa: E402

HAND_WRITTEN = [
    # plain lexicon hits and misses
    "The book was good.",
    "The book was horrible.",
    "the of and",
    "xyzzy frobnicate plugh",
    "",
    "   ",
    "ok",
    "ok!",
    "no!",
    "meh.",
    "I am happy",
    "I am happy!",
    "I am happy!!",
    "I am happy!!!",
    "I am happy!!!!",
    "I am happy!!!!!",
    "I am happy!!!!!!!!!!",
    "are you happy?",
    "are you happy??",
    "are you happy???",
    "are you happy????",
    "are you happy??????",
    "so happy!! really??",
    # negation distance 1..3 and contractions
    "not good",
    "not very good",
    "not really very good",
    "isn't good",
    "isn't very good",
    "wasn't really very good",
    "I don't hate you",
    "I can't say I love it",
    "this is hardly bad",
    "never good",
    "never so good",
    "never this good",
    "never really so good",
    "never really this good",
    "without doubt excellent",
    "without a doubt excellent",
    "rarely happy",
    "seldom sad",
    "despite the win",
    "uh-uh good",
    # "no" forms
    "no",
    "no no no",
    "no good",
    "there is no good option",
    "no or good",
    "no nor good",
    "no one likes mondays",
    "the answer is no",
    # "least" forms
    "least happy",
    "at least happy",
    "very least happy",
    "the least happy person",
    # boosters at distance 1..3 with damping
    "very good",
    "really very good",
    "it is really quite very good",
    "slightly good",
    "somewhat less good",
    "extremely NOT pleased!!!!",
    "I am extremely NOT pleased!!!!",
    "I am not pleased",
    "kind of good",
    "kinda good",
    "sort of bad",
    "sort-of bad",
    "kind of a mess but kind of fun",
    "just enough luck",
    # ALL-CAPS differential
    "GREAT",
    "GREAT stuff",
    "this is GREAT",
    "THIS IS GREAT",
    "this is GREAT and TERRIBLE",
    "VERY good",
    "SO bad",
    "I am SO HAPPY today",
    "AWFUL weather ahead folks",
    # but-clauses, including duplicate sentiment values around "but"
    "good but bad",
    "bad but good",
    "good good but bad",
    "good but good",
    "smart but",
    "but smart",
    "nice day but the traffic was terrible",
    "I liked it but I would not recommend it",
    "great BUT awful",
    "good movie but good acting but good music",
    # special-case idioms at several positions
    "this is the shit",
    "this is the bomb",
    "he is a bad ass",
    "she is badass",
    "waiting at the bus stop",
    "yeah right",
    "yeah right that will work",
    "that was the kiss of death",
    "this cake is to die for",
    "my beating heart",
    "she has a broken heart",
    "it was the shit really",
    "hand to mouth living",
    # emoticons and kept short tokens
    ":)",
    ":(",
    ":) great",
    ":( terrible",
    "happy :) happy",
    ":D today",
    "win :P lose :/",
    "<3 you",
    "</3 forever",
    "8) sunny",
    # urls, mentions, hashtags
    "@friend congrats on the win http://t.co/abc123",
    "#blessed and grateful",
    "RT @user: amazing news everyone",
    "check https://example.com/great-stuff it is great",
    "@a @bb @ccc fine",
    # punctuation stripping edge cases
    "good...",
    "...good",
    "--good--",
    "(good)",
    "good, bad; ugly",
    "'quoted praise'",
    '"scare quotes" win',
    "don't!!! stop!!!",
    "wow—what a mess",
    "well.. that was weird..",
    # mixed whitespace
    "good\tbad",
    "good  \t  bad",
    "   leading spaces happy",
    "trailing sadness   ",
    # clamp and pile-ups
    "love love love love love love love love love",
    "hate hate hate hate hate hate hate hate hate",
    "great amazing wonderful fantastic superb excellent",
    "terrible horrible awful dreadful miserable",
    # hurricane-domain flavored (topic words are not lexicon members)
    "hurricane warning issued for the coast",
    "stay safe everyone",
    "praying for everyone in the storm path",
    "we lost everything in the flood",
    "rain rain rain",
    "evacuation was scary but we are safe now",
    "power is out again ugh",
    "help is on the way",
    "grateful for the rescue teams",
    "the deluge destroyed my street",
    "tornado sirens all night no sleep",
    "so thankful the storm missed us",
    # longer mixed sentences
    "The plot was good, but the characters are uncompelling and the dialog is not great.",
    "Today only kinda sux! But I'll get by, lol",
    "Make sure you :) or :D today!",
    "Not bad at all",
    "Sentiment analysis has never been good.",
    "Sentiment analysis has never been this good!",
    "Most automated sentiment analysis tools are shit.",
    "With VADER, sentiment analysis is the shit!",
    "Other sentiment analysis tools can be quite bad.",
    "On the other hand, VADER is quite bad ass",
    "Roger Dodger is one of the most compelling variations on this theme.",
    "Roger Dodger is at least compelling as a variation on the theme.",
    "Roger Dodger is one of the least compelling variations on this theme.",
    "Not such a badass after all.",
    "Without a doubt, an excellent idea.",
]

WORDS_POS = ["good", "great", "happy", "love", "nice", "win", "fun", "safe", "help"]
WORDS_NEG = ["bad", "sad", "terrible", "hate", "awful", "hurt", "warning", "fear"]
MODIFIERS = ["very", "really", "extremely", "slightly", "hardly", "most", "utterly"]
NEGATIONS = ["not", "never", "isn't", "don't", "cannot", "won't"]
FILLER = ["the", "a", "my", "today", "morning", "street", "again", "folks"]
PUNCT = ["", "!", "!!", "!!!", "?", "??", "!?", "..."]


def random_sentence(rng):
    parts = []
    n = rng.randint(2, 9)
    for _ in range(n):
        r = rng.random()
        if r < 0.28:
            parts.append(rng.choice(WORDS_POS))
        elif r < 0.52:
            parts.append(rng.choice(WORDS_NEG))
        elif r < 0.64:
            parts.append(rng.choice(MODIFIERS))
        elif r < 0.74:
            parts.append(rng.choice(NEGATIONS))
        elif r < 0.80 and parts:
            parts.append("but")
        else:
            parts.append(rng.choice(FILLER))
    if rng.random() < 0.3:
        k = rng.randrange(len(parts))
        parts[k] = parts[k].upper()
    return " ".join(parts) + rng.choice(PUNCT)


def escape(text):
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def main():
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..")
    lex = os.path.join(root, "data", "vader_lexicon.txt")
    out_path = os.path.join(root, "tests", "fixtures", "vader_oracle.tsv")
    analyzer = SentimentIntensityAnalyzer(lex)

    sentences = list(HAND_WRITTEN)
    rng = random.Random(20170825)
    seen = set(sentences)
    while len(sentences) < 200:
        s = random_sentence(rng)
        if s not in seen:
            seen.add(s)
            sentences.append(s)
    sentences = sentences[:200]

    with open(out_path, "w", encoding="utf-8") as f:
        f.write("# expected_compound\tmatched\ttext\n")
        for s in sentences:
            compound = analyzer.polarity_scores(s)
            matched = analyzer.matched(s)
            f.write("%.17g\t%d\t%s\n" % (compound, int(matched), escape(s)))
    print("wrote %d sentences to %s" % (len(sentences), out_path))


if __name__ == "__main__":
    main()
