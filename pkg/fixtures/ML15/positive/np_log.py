import numpy as np

probabilities = np.array([0.5, 0.0])
logp = np.log(probabilities)  # expect: ML15
