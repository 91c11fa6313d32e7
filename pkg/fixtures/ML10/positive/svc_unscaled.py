import numpy as np
from sklearn.svm import SVC

X = np.array([[1.0, 200.0], [2.0, 400.0]])
y = np.array([0, 1])
clf = SVC(C=1.0)
clf.fit(X, y)  # expect: ML10
