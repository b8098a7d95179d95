import copy
import os
from pathlib import Path

from ruamel.yaml import YAML

DEFAULT_CONFIG = {
    "output_dir": "condenlab_out",
    "formats": ["csv", "json"],
    "log_level": "INFO",
    "ga_steps": 100000,
    "ga_mutation_scale": 0.1,
    "series_tolerance": 1e-14,
    "series_max_terms": 100000,
    "jobs": 1,
}

CONFIG_PATH = Path(os.environ.get("CONDENLAB_CONFIG", "~/.condenlab/config.yaml")).expanduser()


def load_config(path: Path = CONFIG_PATH) -> dict:
    """
    Loads the user configuration and merges it over the built-in defaults.

    :param path: The YAML file to read. A missing file yields the defaults.
    :type path: Path
    :return: The merged configuration.
    :rtype: dict
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if path.is_file():
        yaml = YAML(typ="safe")
        with open(path, "r") as f:
            config.update(yaml.load(f) or {})
    return config


CONFIG = load_config()
