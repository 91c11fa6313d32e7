import numpy as np

ln2 = np.log(2.0)
