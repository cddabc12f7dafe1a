from .runner import run, dumps, COMMANDS
from .command_verify import verify
