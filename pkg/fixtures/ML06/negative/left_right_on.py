import pandas as pd

left = pd.DataFrame({"a": [1]})
right = pd.DataFrame({"b": [1]})
joined = left.merge(right, left_on="a", right_on="b", how="left", validate="m:1")
