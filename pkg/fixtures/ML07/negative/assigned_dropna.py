import pandas as pd

df = pd.DataFrame({"a": [1.0, None]})
df = df.dropna()
