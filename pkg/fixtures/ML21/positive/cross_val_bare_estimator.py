import numpy as np
from sklearn.model_selection import cross_val_score
from sklearn.preprocessing import StandardScaler
from sklearn.svm import SVC

X = np.array([[1.0], [2.0], [3.0], [4.0]])
y = np.array([0, 1, 0, 1])
scaler = StandardScaler()
X_scaled = scaler.fit_transform(X)
clf = SVC(C=1.0)
scores = cross_val_score(clf, X_scaled, y)  # expect: ML21
