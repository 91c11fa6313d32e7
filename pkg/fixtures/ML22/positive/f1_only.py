from sklearn.metrics import f1_score

score = f1_score(y_true, y_pred)  # expect: ML22
