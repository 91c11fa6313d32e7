import pandas as pd

df = pd.DataFrame({"a": [1], "b": [2]})
df["a"]["b"] = 5  # expect: ML03
