# Standard Library
from typing import Any, Dict, Type, TypeVar

# Third Party
from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException

# GiantAtom
from giantatom.errors import ConfigError

T = TypeVar("T")


def merge_structured(schema: Type[T], data: Dict[str, Any]) -> DictConfig:
    """Merges a plain dict into the structured config `schema`.

    Type mismatches and unknown keys are reported as ConfigError with the
    dotted path of the offending field.
    """
    cfg = OmegaConf.structured(schema)
    try:
        cfg = OmegaConf.merge(cfg, OmegaConf.create(data))
    except OmegaConfBaseException as e:
        field = getattr(e, "full_key", None) or None
        raise ConfigError(str(e).splitlines()[0], field=field) from e
    return cfg


def to_object(cfg: DictConfig) -> Any:
    """Converts a structured DictConfig back into its dataclass instance."""
    return OmegaConf.to_object(cfg)


def make_cli_cfg(default_cli_cfg: DictConfig, overrides: Dict[str, Any]) -> DictConfig:
    """Applies dotted-key overrides on top of a config."""
    dotlist = [f"{k}={v}" for k, v in overrides.items() if v is not None]
    if not dotlist:
        return default_cli_cfg
    try:
        return OmegaConf.merge(default_cli_cfg, OmegaConf.from_dotlist(dotlist))
    except OmegaConfBaseException as e:
        field = getattr(e, "full_key", None) or None
        raise ConfigError(str(e).splitlines()[0], field=field) from e
