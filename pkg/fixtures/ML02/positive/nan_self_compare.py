import numpy as np

same = np.nan == np.nan  # expect: ML02
differs = 1.0 != np.nan  # expect: ML02
