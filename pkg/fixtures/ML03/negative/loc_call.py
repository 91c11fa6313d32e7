import pandas as pd

df = pd.DataFrame({"one": [1], "two": [2]})
cell = df.loc[:, ("one", "two")]
