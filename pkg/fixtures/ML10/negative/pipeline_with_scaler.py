import numpy as np
from sklearn.decomposition import PCA
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import StandardScaler

X = np.array([[1.0, 200.0], [2.0, 400.0]])
pipe = Pipeline([("scale", StandardScaler()), ("pca", PCA(n_components=1))])
pipe.fit(X)
