import argparse
import os
from pathlib import Path

from ruamel.yaml import YAML

from condenlab.config import DEFAULT_CONFIG

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Write the condenlab user configuration file")
    parser.add_argument("--output-dir", type=str, default=DEFAULT_CONFIG["output_dir"], help="default report directory")
    parser.add_argument(
        "--formats",
        type=str,
        default=",".join(DEFAULT_CONFIG["formats"]),
        help="default output formats, comma separated subset of csv,json,svg",
    )
    parser.add_argument("--log-level", type=str, default=DEFAULT_CONFIG["log_level"])
    parser.add_argument("--ga-steps", type=int, default=DEFAULT_CONFIG["ga_steps"], help="optimizer steps per run")
    parser.add_argument("--ga-mutation-scale", type=float, default=DEFAULT_CONFIG["ga_mutation_scale"])
    parser.add_argument("--series-tolerance", type=float, default=DEFAULT_CONFIG["series_tolerance"])
    parser.add_argument("--series-max-terms", type=int, default=DEFAULT_CONFIG["series_max_terms"])
    parser.add_argument("--jobs", type=int, default=DEFAULT_CONFIG["jobs"], help="configs run concurrently")
    parser.add_argument(
        "--path",
        type=str,
        default=os.environ.get("CONDENLAB_CONFIG", "~/.condenlab/config.yaml"),
        help="file to write, CONDENLAB_CONFIG if set",
    )

    args = parser.parse_args()

    config = {
        "output_dir": args.output_dir,
        "formats": [f.strip() for f in args.formats.split(",") if f.strip()],
        "log_level": args.log_level.upper(),
        "ga_steps": args.ga_steps,
        "ga_mutation_scale": args.ga_mutation_scale,
        "series_tolerance": args.series_tolerance,
        "series_max_terms": args.series_max_terms,
        "jobs": args.jobs,
    }

    yaml = YAML(typ="safe")
    config_file = Path(args.path).expanduser()
    config_file.parent.mkdir(parents=True, exist_ok=True)
    with open(config_file, "w") as f:
        yaml.dump(config, f)
