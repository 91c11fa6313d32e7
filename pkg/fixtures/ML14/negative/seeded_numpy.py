import numpy as np

np.random.seed(42)
data = np.random.rand(8)
