import numpy as np
from sklearn.decomposition import PCA

X = np.array([[1.0, 200.0], [2.0, 400.0]])
pca = PCA(n_components=1)
pca.fit(X)  # expect: ML10
