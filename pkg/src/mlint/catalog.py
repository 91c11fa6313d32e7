"""Static catalog of the 22 rules: id, name, pipeline stage, effect,
generic/API-specific kind, scope, mode gate and remediation advice."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Stage(str, Enum):
    DATA_CLEANING = "Data Cleaning"
    FEATURE_ENGINEERING = "Feature Engineering"
    MODEL_TRAINING = "Model Training"
    MODEL_EVALUATION = "Model Evaluation"


class Effect(str, Enum):
    ERROR_PRONE = "Error-prone"
    EFFICIENCY = "Efficiency"
    READABILITY = "Readability"
    ROBUSTNESS = "Robustness"
    REPRODUCIBILITY = "Reproducibility"
    MEMORY_ISSUE = "Memory Issue"


class Scope(str, Enum):
    PER_FILE = "per-file"
    PROJECT = "project"


class ModeGate(str, Enum):
    ALWAYS = "always"
    DEVELOPMENT_ONLY = "development-only"


class Severity(str, Enum):
    WARNING = "warning"
    INFO = "info"


GENERIC = "Generic"

# Rules whose effects are purely advisory report at Info severity.
_INFO_RULES = {"ML04", "ML06", "ML08", "ML09", "ML16", "ML22"}


@dataclass(frozen=True)
class RuleDescriptor:
    id: str
    name: str
    stages: tuple[Stage, ...]
    effects: tuple[Effect, ...]
    kind: str  # "Generic" or "API-Specific: <library>"
    scope: Scope
    mode_gate: ModeGate
    description: str
    advice: str

    @property
    def severity(self) -> Severity:
        return Severity.INFO if self.id in _INFO_RULES else Severity.WARNING

    @property
    def is_generic(self) -> bool:
        return self.kind == GENERIC


def _rule(rid, name, stages, effects, kind, description, advice,
          scope=Scope.PER_FILE, mode_gate=ModeGate.ALWAYS) -> RuleDescriptor:
    return RuleDescriptor(
        id=rid, name=name, stages=stages, effects=effects, kind=kind,
        scope=scope, mode_gate=mode_gate, description=description, advice=advice,
    )


RULES: tuple[RuleDescriptor, ...] = (
    _rule(
        "ML01", "Unnecessary Iteration",
        (Stage.DATA_CLEANING,), (Effect.EFFICIENCY,), GENERIC,
        "A loop iterates over dataframe rows or tensor slices where a "
        "vectorized operation would do the same work faster.",
        "Replace the loop with a vectorized call such as a Pandas built-in "
        "method or a TensorFlow reduction API.",
    ),
    _rule(
        "ML02", "NaN Equivalence Comparison Misused",
        (Stage.DATA_CLEANING,), (Effect.ERROR_PRONE,), GENERIC,
        "A value is compared to NaN with == or !=, but NaN never compares "
        "equal to anything, including itself.",
        "Use isna()/notna() or numpy.isnan() to test for missing values "
        "instead of comparing against np.nan.",
    ),
    _rule(
        "ML03", "Chain Indexing",
        (Stage.DATA_CLEANING,), (Effect.ERROR_PRONE, Effect.EFFICIENCY),
        "API-Specific: Pandas",
        "Two chained subscripts on a dataframe perform two lookups and make "
        "assignment behavior (view vs copy) unpredictable.",
        "Use a single locator call such as df.loc[:, (a, b)] instead of "
        "df[a][b].",
    ),
    _rule(
        "ML04", "Columns and DataType Not Explicitly Set",
        (Stage.DATA_CLEANING,), (Effect.READABILITY,), GENERIC,
        "A dataframe reader call selects all columns with inferred dtypes, "
        "hiding the downstream data schema.",
        "Pass usecols and dtype to the reader so columns and types are "
        "explicit.",
    ),
    _rule(
        "ML05", "Empty Column Misinitialization",
        (Stage.DATA_CLEANING,), (Effect.ROBUSTNESS,), GENERIC,
        "A new dataframe column is initialized with a filler value (zero or "
        "empty string), which defeats isnull()/notnull() checks.",
        "Initialize new empty columns with np.nan instead of zeros or empty "
        "strings.",
    ),
    _rule(
        "ML06", "Merge API Parameter Not Explicitly Set",
        (Stage.DATA_CLEANING,), (Effect.READABILITY, Effect.ERROR_PRONE), GENERIC,
        "A merge call relies on default join keys, join method, or skips "
        "merge validation.",
        "Specify on (or left_on/right_on), how and validate explicitly in "
        "merge calls.",
    ),
    _rule(
        "ML07", "In-Place APIs Misused",
        (Stage.DATA_CLEANING,), (Effect.ERROR_PRONE,), GENERIC,
        "The result of a copy-returning API is discarded; the original "
        "object is left unchanged.",
        "Assign the result to a variable or set the in-place parameter of "
        "the API.",
    ),
    _rule(
        "ML08", "Dataframe Conversion API Misused",
        (Stage.DATA_CLEANING,), (Effect.ERROR_PRONE,), "API-Specific: Pandas",
        "The .values attribute has inconsistent return types across "
        "dataframe contents.",
        "Use df.to_numpy() instead of df.values to convert a dataframe to a "
        "NumPy array.",
    ),
    _rule(
        "ML09", "Matrix Multiplication API Misused",
        (Stage.DATA_CLEANING,), (Effect.READABILITY,), "API-Specific: NumPy",
        "np.dot() on two-dimensional matrices works but contradicts the "
        "mathematical meaning of a dot product.",
        "Use np.matmul() for two-dimensional matrix multiplication.",
    ),
    _rule(
        "ML10", "No Scaling before Scaling-Sensitive Operation",
        (Stage.FEATURE_ENGINEERING,), (Effect.ERROR_PRONE,), GENERIC,
        "A scaling-sensitive operation (PCA, SVM, SGD, MLP) is fit without "
        "any feature scaling step in scope.",
        "Scale features (e.g. StandardScaler) before scaling-sensitive "
        "estimators, ideally inside a Pipeline.",
    ),
    _rule(
        "ML11", "Hyperparameter Not Explicitly Set",
        (Stage.MODEL_TRAINING,), (Effect.ERROR_PRONE, Effect.REPRODUCIBILITY),
        GENERIC,
        "A learning algorithm is constructed entirely from default "
        "hyperparameters.",
        "Set hyperparameters explicitly so results are tunable and "
        "replicable.",
    ),
    _rule(
        "ML12", "Memory Not Freed",
        (Stage.MODEL_TRAINING,), (Effect.MEMORY_ISSUE,), GENERIC,
        "Models are constructed in a loop without freeing the previous "
        "graph, or loss tensors are retained across iterations.",
        "Call clear_session() when building models in a loop and detach "
        "loss tensors (detach()/item()) before accumulating them.",
    ),
    _rule(
        "ML13", "Deterministic Algorithm Option Not Used",
        (Stage.MODEL_TRAINING,), (Effect.REPRODUCIBILITY,), GENERIC,
        "The project uses torch but never enables deterministic algorithms, "
        "making debugging runs irreproducible.",
        "Call torch.use_deterministic_algorithms(True) during development; "
        "drop it for deployment.",
        scope=Scope.PROJECT, mode_gate=ModeGate.DEVELOPMENT_ONLY,
    ),
    _rule(
        "ML14", "Randomness Uncontrolled",
        (Stage.MODEL_TRAINING, Stage.MODEL_EVALUATION), (Effect.REPRODUCIBILITY,),
        GENERIC,
        "Random APIs are used without a global seed, or estimators/splitters "
        "omit random_state.",
        "Set the library's global random seed explicitly and pass "
        "random_state to estimators and splitters.",
        scope=Scope.PROJECT, mode_gate=ModeGate.DEVELOPMENT_ONLY,
    ),
    _rule(
        "ML15", "Missing the Mask of Invalid Value",
        (Stage.MODEL_TRAINING,), (Effect.ERROR_PRONE,), GENERIC,
        "A log-family function receives an unmasked argument that can reach "
        "zero during training.",
        "Clip the argument first, e.g. tf.log(tf.clip_by_value(x, 1e-10, "
        "1.0)).",
    ),
    _rule(
        "ML16", "Broadcasting Feature Not Used",
        (Stage.MODEL_TRAINING,), (Effect.EFFICIENCY,), GENERIC,
        "A tensor is tiled to match another operand where broadcasting "
        "would avoid materializing the intermediate.",
        "Drop the tiling call and rely on elementwise broadcasting.",
    ),
    _rule(
        "ML17", "TensorArray Not Used",
        (Stage.MODEL_TRAINING,), (Effect.EFFICIENCY, Effect.ERROR_PRONE),
        "API-Specific: TensorFlow 2",
        "An array initialized with tf.constant() is grown inside a loop via "
        "concat/stack reassignment.",
        "Use tf.TensorArray() for arrays whose value grows in a loop.",
    ),
    _rule(
        "ML18", "Training / Evaluation Mode Improper Toggling",
        (Stage.MODEL_TRAINING,), (Effect.ERROR_PRONE,), GENERIC,
        "A model switched to eval() is still in evaluation mode when "
        "training resumes.",
        "Call .train() to toggle the model back after the inference step.",
    ),
    _rule(
        "ML19", "Pytorch Call Method Misused",
        (Stage.MODEL_TRAINING,), (Effect.ROBUSTNESS,), "API-Specific: PyTorch",
        "Calling .forward() directly skips the hooks that the callable "
        "interface runs.",
        "Call the module itself, e.g. self.net(x), instead of "
        "self.net.forward(x).",
    ),
    _rule(
        "ML20", "Gradients Not Cleared before Backward Propagation",
        (Stage.MODEL_TRAINING,), (Effect.ERROR_PRONE,), "API-Specific: PyTorch",
        "backward() runs in a training loop without a preceding zero_grad(), "
        "so gradients accumulate across iterations.",
        "Use optimizer.zero_grad(), loss.backward(), optimizer.step() "
        "together, in that order.",
    ),
    _rule(
        "ML21", "Data Leakage",
        (Stage.MODEL_EVALUATION,), (Effect.ERROR_PRONE,), GENERIC,
        "Preprocessing is fit on the full dataset before the train/test "
        "split, leaking validation statistics into training.",
        "Split first, or wrap preprocessing and estimator in a Pipeline() "
        "so transforms are fit on training folds only.",
    ),
    _rule(
        "ML22", "Threshold-Dependent Validation",
        (Stage.MODEL_EVALUATION,), (Effect.ROBUSTNESS,), GENERIC,
        "Model evaluation relies only on threshold-dependent metrics such "
        "as the F-measure.",
        "Prefer threshold-independent metrics such as ROC AUC.",
    ),
)

RULES_BY_ID: dict[str, RuleDescriptor] = {r.id: r for r in RULES}

ALL_RULE_IDS: tuple[str, ...] = tuple(r.id for r in RULES)


def get_rule(rule_id: str) -> RuleDescriptor:
    try:
        return RULES_BY_ID[rule_id]
    except KeyError:
        raise KeyError(f"unknown rule id: {rule_id}") from None
