"""
Usage:
    logmajor run [options]
    logmajor replay <statement> <witness-file> [options]
    logmajor selftest [options]
    logmajor catalog [options]
    logmajor goldens <path>

config-options:
    --config-file=<str>          Path to the yaml file with the sweep configuration. [default: config.yaml]
    --log-level=<str>            One of DEBUG, INFO, WARNING, ERROR.

run-options:
    --statements=<list>          Comma-separated statement ids. Empty selects every paper statement.
    --dims=<list>                Comma-separated matrix dimensions.
    --trials=<int>               Number of random trials per cell.
    --seed=<int>                 Master seed. Falls back to LOGMAJOR_SEED, then 0.
    --tolerance=<float>          Worst slack below -tolerance is a failure.
    --exploratory                Also sweep the out-of-range parameter grids.
    --workers=<int>              Number of worker processes.

catalog-options:
    --format=<str>               csv or json. [default: json]

output-options:
    --out=<dir>                  Output directory. For replay, where curves.csv and margins.csv
                                 are written; for catalog, the output file (stdout otherwise).

Exit status is 0 when every check passes, 1 when a check fails and 2 on a
configuration, parse or I/O error.
"""
import sys

import yaml
from docopt import docopt
from easydict import EasyDict

from logmajor import __version__
from logmajor.exceptions import ConfigError, ParseError
from logmajor.harness import SuiteHarness
from logmajor.inequalities.catalog import render_catalog
from logmajor.storage.witness import dump_goldens
from logmajor.suite_config import SuiteConfig

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

# config keys whose command line flag is not the key itself
ARG_ALIASES = {"master_seed": "--seed", "out_dir": "--out"}


# PARSE CLI
def _get_config(args):
    """Fetches the default configuration from the provided file, and
    overwrites it with any provided command line arguments.

    Args:
        args (dict): dictionary created using the docopt library based on the
            default parameters and the parameters entered in the command line

    Raises:
        ConfigError: if the file cannot be read or is not a yaml mapping
    """
    path = args["--config-file"]
    try:
        with open(path, "r") as f:
            config = yaml.load(f, Loader=yaml.FullLoader)
    except OSError as error:
        raise ConfigError(f"cannot read config file {path}: {error}")
    except yaml.YAMLError as error:
        raise ConfigError(f"config file {path} is not valid yaml: {error}")
    if config is None:
        config = {}
    if type(config) != dict:
        raise ConfigError(f"config file {path} must hold a mapping")

    # overwrite with cli args if provided
    config = _overwrite_config(config, args)

    config = EasyDict(config)
    return config


def _overwrite_config(config, args):
    """Overwrites config from yaml file with any matching command line args provided.
    If overwriting, casts the command line value to the type of the corresponding
    default config value; lists are given as comma-separated values.

    Args:
        config (dict): Dictionary from parsed yaml file. May be nested. Keys expected to be snake_case.
        args (dict): Dictionary from parsed command line arguments. Keys expected to be in --this-format.

    Returns:
        config (dict): Config with appropriate values overwritten.
    """
    assert type(config) == dict

    for key, value in config.items():

        # recurse if found nested dictionary
        if type(value) == dict:
            result = _overwrite_config(value, args)
            config[key] = result

        # overwrite config if necessary
        else:
            arg_key = ARG_ALIASES.get(key, _arg_from_snakecase_key(key))
            arg_val = args.get(arg_key)
            if arg_val:
                config[key] = _cast(arg_val, config[key])

    return config


def _cast(arg_val, config_val):
    if type(config_val) == list:
        kind = type(config_val[0]) if config_val else str
        return [kind(part.strip()) for part in str(arg_val).split(",") if part.strip()]
    if config_val is None or type(arg_val) == bool:
        return arg_val
    return type(config_val)(arg_val)


def _arg_from_snakecase_key(snakecase_key):
    """Converts input snake case to command line argument format.

    Args:
        snakecase_key (string): Expected to be in this_format.

    Returns:
        string: Converted to --this-format.
    """
    key = snakecase_key.replace("_", "-")
    key = "--" + key
    return key


def _write_text(text, path=None):
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _run_command(args):
    if args["catalog"]:
        try:
            _write_text(render_catalog(args["--format"]), args["--out"])
        except ValueError as error:
            raise ConfigError(str(error))
        return EXIT_PASS
    if args["goldens"]:
        _write_text(dump_goldens(), args["<path>"])
        return EXIT_PASS

    config = SuiteConfig.from_config(_get_config(args))
    harness = SuiteHarness(config=config)
    try:
        if args["run"]:
            passed = harness.run().passed
        elif args["selftest"]:
            passed = harness.selftest().passed
        else:
            passed = harness.replay(args["<statement>"], args["<witness-file>"], out_dir=args["--out"]).passed
    finally:
        harness.done()
    return EXIT_PASS if passed else EXIT_FAIL


## MAIN
def main(argv=None):
    args = docopt(__doc__, argv=argv, version=__version__)
    try:
        return _run_command(args)
    except (ConfigError, ParseError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
