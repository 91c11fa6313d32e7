import pandas as pd

df = pd.DataFrame({"a": [1, 2]})
total = sum(df.values)  # expect: ML08
