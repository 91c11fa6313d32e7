import pandas as pd

df = pd.DataFrame({"a": [1, 2]})
df["flag"] = 0  # expect: ML05
