import pandas as pd

rows = [1, 2, 3]
df = pd.DataFrame({"a": [1, 2]})
df["count"] = len(rows)
