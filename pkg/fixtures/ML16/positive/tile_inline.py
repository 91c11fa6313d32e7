import numpy as np

a = np.ones((1, 3))
b = np.ones((5, 3))
c = np.tile(a, (5, 1)) * b  # expect: ML16
