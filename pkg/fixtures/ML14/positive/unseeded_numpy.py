import numpy as np

data = np.random.rand(8)  # expect: ML14
more = np.random.rand(8)
