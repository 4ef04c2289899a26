from .commands import COMMANDS, SCENARIOS, error_record, run, write_frame
from .run_config import RunConfig, parse_config, serialize_config, validate_run_config
