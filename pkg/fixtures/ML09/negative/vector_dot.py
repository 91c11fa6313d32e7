import numpy as np

v = np.zeros(3)
w = np.ones(3)
s = np.dot(v, w)
scalar = np.dot(3.0, 4.0)
