import pandas as pd

left = pd.DataFrame({"k": [1]})
right = pd.DataFrame({"k": [1]})
joined = left.merge(right, on="k")  # expect: ML06
