import pandas as pd

df = pd.DataFrame({"a": [1, 2]})
arr = df.values  # expect: ML08
