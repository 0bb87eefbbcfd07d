"""Level truncation: weight sets, torus points and the group T_k."""
from level.level_data import LevelData, level_data
from level.torus import RationalPhase, TorusPoint, torus_eval

__all__ = ["LevelData", "level_data", "RationalPhase", "TorusPoint", "torus_eval"]
