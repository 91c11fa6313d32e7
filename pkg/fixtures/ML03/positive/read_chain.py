import pandas as pd

df = pd.DataFrame({"one": [1], "two": [2]})
cell = df["one"]["two"]  # expect: ML03
