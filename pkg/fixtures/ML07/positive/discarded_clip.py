import numpy as np

arr = np.array([0.5, 1.5])
np.clip(arr, 0.0, 1.0)  # expect: ML07
