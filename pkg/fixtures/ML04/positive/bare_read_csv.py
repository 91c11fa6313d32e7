import pandas as pd

df = pd.read_csv("data.csv")  # expect: ML04
