import pandas as pd

df = pd.read_csv("data.csv", usecols=["a", "b"], dtype={"a": "int64", "b": "float64"})
