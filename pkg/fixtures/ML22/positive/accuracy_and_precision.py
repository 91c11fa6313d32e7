from sklearn.metrics import accuracy_score, precision_score

acc = accuracy_score(y_true, y_pred)  # expect: ML22
prec = precision_score(y_true, y_pred)  # expect: ML22
