from .config import HANDLE_SPACE as HANDLE_SPACE
from .config import Config as Config
from .config import CreateConfigFromEnv as CreateConfigFromEnv
from .config import app_config as app_config
