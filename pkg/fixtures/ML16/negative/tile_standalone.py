import numpy as np

a = np.ones((1, 3))
tiled = np.tile(a, (5, 1))
print(tiled.shape)
