import pandas as pd

df = pd.DataFrame({"price": [1.0, 2.0, 3.0]})
result = df.add(1)
