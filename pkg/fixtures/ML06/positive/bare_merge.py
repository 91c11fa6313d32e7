import pandas as pd

left = pd.DataFrame({"k": [1]})
right = pd.DataFrame({"k": [1]})
joined = left.merge(right)  # expect: ML06
