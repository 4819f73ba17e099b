import os
from pathlib import Path

# Base directory
BASE_DIR = Path(__file__).resolve().parent

# Data configuration
DATA_DIR = os.path.join(BASE_DIR, 'data')
QUIVER_DIR = os.path.join(DATA_DIR, 'quivers')

# Logging configuration
LOG_DIR = os.environ.get('QFL_LOG_DIR', os.path.join(BASE_DIR, 'logs'))
LOG_FILE = os.path.join(LOG_DIR, 'quiver_fano.log')
LOG_TO_FILE = os.environ.get('QFL_LOG_FILE', '1') != '0'

# Application Settings
APP_NAME = "quiver-fano"
APP_VERSION = "1.0.0"

# Enumeration budget: maximum number of vectors/specs a single scan may visit
DEFAULT_BUDGET = int(os.environ.get('QFL_BUDGET', 10 ** 8))

# Worker processes for batch scans (1 = run in-process)
DEFAULT_JOBS = int(os.environ.get('QFL_JOBS', 1))

# Integer policy: every intermediate must fit a signed 64-bit word
INT_LIMIT = 2 ** 63 - 1
