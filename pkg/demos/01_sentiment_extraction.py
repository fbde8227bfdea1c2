"""How valence shifters change extracted sentiment.

Runs the naive-context extractor on a few short utterances with the
bundled test lexicons and prints the per-token series.
"""

from arc_miner import ExtractionParams, datasets, extract, load_polarity, load_shifters, tokenize

polarity = load_polarity(datasets.polarity_path())
shifters = load_shifters(datasets.shifters_path())
params = ExtractionParams()

sentences = [
    "this was a bad day in the sun",
    "this was not a bad day in the sun",
    "this was really not a bad day in the sun",
    "the trip was really good but the food was terrible",
    "it was hardly a good idea",
]

for sentence in sentences:
    tokens = tokenize(sentence)
    series = extract(tokens, polarity, shifters, params)
    print(f"\n  {sentence}")
    for i in series.hit_indices:
        window = tokens[max(0, i - 2): i + 3]
        print(f"    {tokens[i]!r}: {series.values[i]:+.4f}   context: {' '.join(window)}")
