from .logger import Logger, LOGGER_NAME
from .config import RunConfig
