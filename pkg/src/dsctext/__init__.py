"""Text categorization by similarity search over domain-specific words."""

from .core import (
    ClassMeasure,
    ClassProfiles,
    DscModel,
    EmptyDomainWarning,
    ModelFormatError,
    ModelVersionError,
    Prediction,
    VocabularyMismatchError,
    class_measure,
    class_profiles,
    classify,
    classify_by_similarity,
    extract_domain_specific,
    fit,
    load_model,
    predict,
    save_model,
    score,
    train,
)
from .corpus_io import CorpusError, FoldPlan, LabeledCorpus, RawDocument, load_dir, load_tsv, make_folds, write_tsv
from .evaluation import (
    ConfusionMatrix,
    MetricsReport,
    confusion,
    cross_validate,
    evaluate,
    grid_search,
    metrics,
    timed,
    train_and_evaluate,
)
from .preprocess import Document, PreprocessConfig, load_stopwords, preprocess, r8_config, tokenize
from .vsm import (
    FrequencyVector,
    Vocabulary,
    build_vocabulary,
    document_frequency,
    frequency_vector,
    inner_product,
    term_count,
    tfidf_vector,
)

__version__ = "0.1.0"
