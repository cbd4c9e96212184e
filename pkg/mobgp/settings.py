from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseSettings

# the naive (occupied, visited) oracle is exponential, keep it for small graphs
ORACLE_THRESHOLD = 10

# number of configuration expansions between two clock checks
DEADLINE_POLL_INTERVAL = 256

# default settings file, read from the working directory
ENV_FILE = "mobgp.env"

# logging
LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
LOG_DATEFMT = "%H:%M:%S"

# exit codes of the command line interface
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INCOMPLETE = 2
EXIT_ILLEGAL = 3
EXIT_MALFORMED = 4

# fixed columns of every table report
TABLE_COLUMNS = ["expression", "expected", "computed", "match", "elapsed_ms"]
CSV_HEADER = ",".join(TABLE_COLUMNS)


class MobgpSettings(BaseSettings):
    """Default settings, read from MOBGP_* environment variables

    Values from a 'mobgp.env' file in the working directory are loaded
    into the environment first (see get_settings). Command line flags
    override these values.
    """

    threads: int = 1
    time_limit: Optional[float] = None
    log_level: str = "WARNING"
    oracle_threshold: int = ORACLE_THRESHOLD

    class Config:
        env_prefix = "MOBGP_"


def get_settings(env_file: str = ENV_FILE) -> MobgpSettings:
    load_dotenv(env_file)
    return MobgpSettings()
