# %% [markdown]
# # Domain-specific words and the classifier
#
# A four-document toy corpus with two labels walks through training and
# classification by hand.

# %%
import math

from dsctext import (
    Document,
    build_vocabulary,
    class_measure,
    class_profiles,
    classify,
    classify_by_similarity,
    extract_domain_specific,
    fit,
    inner_product,
    score,
)

docs = [
    Document("d1", ("apple", "apple", "banana"), "A"),
    Document("d2", ("apple", "cherry"), "A"),
    Document("d3", ("banana", "banana", "cherry"), "B"),
    Document("d4", ("cherry", "durian"), "B"),
]
vocab = build_vocabulary(docs)

# %% [markdown]
# Class profiles: the mean share of each word across a label's documents.
# For instance apple is (2/3 + 1/2) / 2 = 7/12 of an average A document.

# %%
profiles = class_profiles(docs, vocab)
for label in profiles.labels:
    print(label, {vocab.terms[t]: round(v, 4) for t, v in sorted(profiles.f[label].items())})

# %% [markdown]
# A word is specific to a label when its profile there is larger than alpha
# times the sum of its profiles elsewhere. Raising alpha shrinks the sets.

# %%
for alpha in (0, 0.5, 1, 2, 1e6):
    cs = extract_domain_specific(profiles, alpha)
    print(f"alpha={alpha:<9g}", {l: sorted(vocab.terms[t] for t in s) for l, s in cs.items()})

# %% [markdown]
# Each label is represented by the uniform measure on its specific words,
# scaled to unit l^p norm. A document scores the normalized share of its
# words that fall in each set.

# %%
model = fit(docs, alpha=1.0, p=1)
w = model.vectorize(Document("q", ("apple", "banana")))
for label in model.labels:
    x = class_measure(model.cs[label], 1)
    print(label, "score", score(w, model.cs[label], 1), "inner product", inner_product(w, x))

# %% [markdown]
# The label is the nearest measure under the inner product. p changes the
# normalization: with p = inf sets are not normalized at all, and here the
# two labels tie (the earlier label wins, with the tie flagged).

# %%
for p in (1, 2, math.inf):
    print(f"p={p}:", classify(w, model, p), "| via measures:", classify_by_similarity(w, model, p).label)
