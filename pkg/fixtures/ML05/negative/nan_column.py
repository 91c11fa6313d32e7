import pandas as pd
import numpy as np

df = pd.DataFrame({"a": [1, 2]})
df["later"] = np.nan
