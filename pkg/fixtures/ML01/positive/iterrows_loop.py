import pandas as pd

df = pd.DataFrame({"price": [1.0, 2.0, 3.0]})
result = []
for index, row in df.iterrows():  # expect: ML01
    result.append(row[0] + 1)
result = pd.DataFrame(result)
