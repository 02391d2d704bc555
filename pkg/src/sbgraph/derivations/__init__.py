from .checker import CheckReport, StepVerdict, check, match_target
from .generators import completion_steps, gen_lemma_bicomplete, gen_lemma_nabla
from .script import DerivationScript, ScriptError, Target, parse_script, serialize_script

__all__ = [
    "CheckReport",
    "DerivationScript",
    "ScriptError",
    "StepVerdict",
    "Target",
    "check",
    "completion_steps",
    "gen_lemma_bicomplete",
    "gen_lemma_nabla",
    "match_target",
    "parse_script",
    "serialize_script",
]
