"""Application settings and configuration."""
import os
from typing import Optional
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Numerical tolerances
TOL_ORTHONORMAL = float(os.getenv("FUSIONRING_TOL_ORTHONORMAL", "1e-8"))
TOL_PATH_AGREEMENT = float(os.getenv("FUSIONRING_TOL_PATH_AGREEMENT", "1e-9"))
TOL_INTEGRALITY = float(os.getenv("FUSIONRING_TOL_INTEGRALITY", "1e-6"))
TOL_UNITARITY = float(os.getenv("FUSIONRING_TOL_UNITARITY", "1e-8"))
TOL_CONJUGATION = float(os.getenv("FUSIONRING_TOL_CONJUGATION", "1e-12"))

# Group size caps
WEYL_ORDER_CAP = int(os.getenv("FUSIONRING_WEYL_ORDER_CAP", str(10**7)))
TORUS_GROUP_CAP = int(os.getenv("FUSIONRING_TORUS_GROUP_CAP", str(10**6)))
FUNDAMENTAL_SET_CAP = int(os.getenv("FUSIONRING_FUNDAMENTAL_SET_CAP", str(10**5)))

# Weyl sums longer than this use compensated summation
COMPENSATED_SUM_THRESHOLD = int(os.getenv("FUSIONRING_COMPENSATED_SUM_THRESHOLD", str(10**5)))

# Workers for character matrix / table fills
DEFAULT_THREADS = int(os.getenv("FUSIONRING_THREADS", "1"))

# Memo cache sizes
MEMO_CACHE_SIZE = int(os.getenv("FUSIONRING_MEMO_CACHE_SIZE", "4096"))

# Logging
LOG_LEVEL = os.getenv("FUSIONRING_LOG_LEVEL", "INFO")
LOG_FILE: Optional[str] = os.getenv("FUSIONRING_LOG_FILE")
