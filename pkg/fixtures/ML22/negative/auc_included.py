from sklearn.metrics import f1_score, roc_auc_score

score = f1_score(y_true, y_pred)
auc = roc_auc_score(y_true, y_prob)
