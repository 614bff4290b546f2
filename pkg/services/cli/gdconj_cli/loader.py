import logging
import tomllib
from importlib import resources
from pathlib import Path

from pydantic import ValidationError

from gdconj_maps import AffineMap, LFMap, Map, MapError, Matrix2, parse_expr
from gdconj_models import AffineSpec, LFSpec, MapSpec, PairConfig, SystemSpec
from gdconj_systems import System, SystemPair

logger = logging.getLogger(__name__)

FIXTURES = ("ex-affine", "ex-identity", "ex-lf-singular", "ex-lf-smooth", "ex-nonlinear")


class ConfigError(ValueError):
    pass


def parse_config(text: str, source: str = "<config>") -> PairConfig:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{source}: invalid TOML: {exc}") from exc
    try:
        return PairConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        key = ".".join(str(part) for part in first["loc"])
        raise ConfigError(f"{source}: {key}: {first['msg']}") from exc


def load_config(path: str | Path) -> PairConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return parse_config(text, source=str(path))


def load_fixture(name: str) -> PairConfig:
    if name not in FIXTURES:
        raise ConfigError(f"unknown fixture {name!r}; choose one of {', '.join(FIXTURES)}")
    text = resources.files("gdconj_cli.fixtures").joinpath(f"{name}.toml").read_text(encoding="utf-8")
    return parse_config(text, source=name)


def build_map(spec: MapSpec, key: str) -> Map:
    try:
        if isinstance(spec, AffineSpec):
            return AffineMap(spec.slope, spec.intercept)
        if isinstance(spec, LFSpec):
            return LFMap(Matrix2(spec.a, spec.b, spec.c, spec.d))
        return parse_expr(spec.formula, declared_lip=spec.lip)
    except MapError as exc:
        raise ConfigError(f"{key}: {exc}") from exc


def build_system(spec: SystemSpec, name: str, label: str) -> System:
    rows = spec.rows()
    maps = [[build_map(rows[i][j], f"{name}.{i}.{j}") for j in (0, 1)] for i in (0, 1)]
    return System.from_rows(maps, label=f"{label}:{name}" if label else name)


def build_pair(config: PairConfig) -> SystemPair:
    pair = SystemPair(
        f=build_system(config.f, "f", config.label),
        g=build_system(config.g, "g", config.label),
        label=config.label,
    )
    logger.info("Loaded system pair", extra={"pair": config.label, "f": pair.f.describe(), "g": pair.g.describe()})
    return pair
