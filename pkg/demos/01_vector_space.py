# %% [markdown]
# # Documents as sparse vectors
#
# Raw text becomes a token sequence (lowercase, split on anything that is not
# a letter or digit, drop stop words and short words). Tokens are indexed by
# a vocabulary, and a document becomes a sparse map from term index to
# weight.

# %%
from dsctext import (
    PreprocessConfig,
    RawDocument,
    build_vocabulary,
    frequency_vector,
    inner_product,
    load_stopwords,
    preprocess,
    tfidf_vector,
)

config = PreprocessConfig(min_word_len_exclusive=2, stopwords=load_stopwords())
raw = [
    RawDocument("1", "Oil prices rose sharply; crude futures hit a 3-month high."),
    RawDocument("2", "The company reported higher profit and a higher dividend."),
    RawDocument("3", "Crude oil output from the Gulf fell, oil traders said."),
]
docs = [preprocess(r, config) for r in raw]
for d in docs:
    print(d.id, d.tokens)

# %% [markdown]
# The vocabulary lists terms in order of first appearance.

# %%
vocab = build_vocabulary(docs)
print(vocab.m, "terms:", vocab.terms)

# %% [markdown]
# Relative frequency vectors: each weight is count / document length, so a
# document whose words are all known sums to one.

# %%
vectors = [frequency_vector(d, vocab) for d in docs]
for d, w in zip(docs, vectors):
    print(d.id, {vocab.terms[i]: round(x, 3) for i, x in w.entries.items()}, "sum", w.total())

# %% [markdown]
# Words that were never seen in training still count towards the length,
# so the vector then sums to less than one.

# %%
unseen = preprocess(RawDocument("q", "crude shipments delayed"), config)
w = frequency_vector(unseen, vocab)
print({vocab.terms[i]: x for i, x in w.entries.items()}, "sum", w.total())

# %% [markdown]
# tf-idf weights (count times log inverse document frequency) are available
# as a utility; the classifier itself does not use them.

# %%
tfidf = tfidf_vector(docs[2], docs, vocab)
print({vocab.terms[i]: round(x, 3) for i, x in tfidf.items()})

# %%
print("similarity 1~3:", inner_product(vectors[0], vectors[2]))
print("similarity 1~2:", inner_product(vectors[0], vectors[1]))
